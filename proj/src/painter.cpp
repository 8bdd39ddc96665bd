#include "rx3/painter.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <mutex>
#include <optional>

#include "rx3/detect.hpp"
#include "rx3/errors.hpp"
#include "rx3/metrics.hpp"
#include "rx3/rainbow.hpp"
#include "rx3/solver.hpp"

namespace rx3 {

namespace {

constexpr int kMaxSmallComplete = 12;

EdgeColoring search_complete(int n) {
  const Graph kn = build_named({FamilyKind::complete, n});
  const int colors = n <= 5 ? 2 : 3;
  // Generous deadline: the search is sub-second for every n in range.
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::minutes(10);
  auto found = find_3rainbow_coloring(kn, colors, deadline);
  if (!found) {
    throw ContractError("no " + std::to_string(colors) + "-color 3-rainbow coloring of K" +
                        std::to_string(n));
  }
  return *found;
}

// Colorings of K_q for cliques found inside larger graphs; cached per order.
const EdgeColoring& complete_palette(int q) {
  static std::mutex mutex;
  static std::vector<std::optional<EdgeColoring>> cache;
  std::lock_guard lock(mutex);
  if (static_cast<int>(cache.size()) <= q) cache.resize(q + 1);
  if (!cache[q]) cache[q] = search_complete(q);
  return *cache[q];
}

void require_free(const Graph& g, const std::vector<std::pair<std::string, Graph>>& forbidden) {
  for (const auto& [name, h] : forbidden) {
    if (auto witness = contains_induced(g, h)) throw PreconditionError(name, *witness);
  }
}

// Colors G[clique] with a 3-rainbow coloring shifted to start at `first`.
void paint_clique(const Graph& g, const std::vector<Vertex>& clique, Color first,
                  std::vector<Color>& colors) {
  const int q = static_cast<int>(clique.size());
  if (q < 2) return;
  if (q == 2) {
    colors[g.edge_id(clique[0], clique[1])] = first;
    return;
  }
  const Graph kq = build_named({FamilyKind::complete, q});
  const EdgeColoring& palette = complete_palette(q);
  for (int id = 0; id < kq.size(); ++id) {
    const Edge e = kq.edges()[id];
    colors[g.edge_id(clique[e.u], clique[e.v])] = first - 1 + palette[id];
  }
}

void verify_or_throw(const Graph& g, const EdgeColoring& coloring, const char* what) {
  const RainbowCheck check = is_3rainbow(g, coloring);
  if (!check.valid) {
    const auto& s = *check.failing_triple;
    throw ContractError(std::string(what) + " produced a coloring with no rainbow tree for {" +
                        std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
                        std::to_string(s[2]) + "}");
  }
}

}  // namespace

EdgeColoring color_complete_small(int n) {
  if (n < 3 || n > kMaxSmallComplete) {
    throw CapExceededError("complete-graph colorer handles 3 <= n <= " +
                           std::to_string(kMaxSmallComplete) + ", got " + std::to_string(n));
  }
  return complete_palette(n);
}

CliqueStarColoring color_p4_star_free(const Graph& g, int r, PainterOptions options) {
  if (r < 3) throw InputError("star bound r must be >= 3");
  if (g.order() < 3) throw InputError("graph needs at least 3 vertices");
  require_connected(g);
  require_free(g, {{"P4", build_named({FamilyKind::path, 4})},
                   {"K1," + std::to_string(r), build_named({FamilyKind::star, r})}});

  SXYPartition part;
  part.clique = max_clique(g);
  VertexSet in_clique = to_vertex_set(g, part.clique);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in_clique.test(v) && !g.neighbors(v).intersects(in_clique)) {
      throw ContractError("maximum clique does not dominate vertex " + std::to_string(v));
    }
  }
  part.independent = max_independent_in(g, ~in_clique);
  VertexSet in_x = to_vertex_set(g, part.independent);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in_clique.test(v) && !in_x.test(v)) part.rest.push_back(v);
  for (Vertex z : part.clique) {
    if (in_x.is_subset_of(g.neighbors(z))) {
      part.hub = z;
      break;
    }
  }
  if (part.hub < 0) throw ContractError("no clique vertex is adjacent to all of X");
  const int l = static_cast<int>(part.independent.size());
  if (l > r - 1) throw ContractError("independent part exceeds r - 1 on a K1,r-free graph");
  for (Vertex y : part.rest) {
    if (!g.neighbors(y).intersects(in_x) || !g.neighbors(y).intersects(in_clique)) {
      throw ContractError("vertex " + std::to_string(y) + " of Y lacks an X or S neighbor");
    }
  }

  std::vector<int> x_index(g.order(), 0);  // 1-based position in X
  for (int i = 0; i < l; ++i) x_index[part.independent[i]] = i + 1;
  VertexSet in_y = to_vertex_set(g, part.rest);

  std::vector<Color> colors(g.size(), 1);  // remaining edges keep color 1
  const bool save = options.save_color && l >= 4;
  for (int id = 0; id < g.size(); ++id) {
    auto [u, v] = g.edges()[id];
    // Normalize so that the X endpoint, if any, is u; else the S endpoint.
    if (x_index[v] || (in_clique.test(v) && !x_index[u])) std::swap(u, v);
    if (x_index[u]) {
      const int i = x_index[u];
      if (v == part.hub) colors[id] = i;
      else if (in_y.test(v)) colors[id] = (save && i == l) ? 1 : i + 1;
    } else if (in_clique.test(u) && in_y.test(v)) {
      colors[id] = l + 2;
    } else if (in_y.test(u) && in_y.test(v)) {
      colors[id] = l + 3;
    }
  }
  paint_clique(g, part.clique, l + 4, colors);

  EdgeColoring coloring = EdgeColoring(g, std::move(colors)).compacted();
  verify_or_throw(g, coloring, "clique-star construction");
  const int used = coloring.num_colors();
  return {std::move(coloring), used, std::move(part)};
}

LayeredColoring color_layered(const Graph& g, const BoundParams& params, PainterOptions options) {
  params.validate();
  if (g.order() < 3) throw InputError("graph needs at least 3 vertices");
  require_connected(g);
  require_free(g, {{"K1," + std::to_string(params.r), build_named({FamilyKind::star, params.r})},
                   {"K" + std::to_string(params.s) + "h",
                    build_named({FamilyKind::hairy_clique, params.s})},
                   {"P" + std::to_string(params.l), build_named({FamilyKind::path, params.l})}});

  LayeredColoring out;
  out.decomposition.center = ecc_rad_diam(g).central_vertex;
  out.decomposition.layers = distance_layers(g, out.decomposition.center);

  std::vector<Color> colors(g.size(), 0);
  VertexSet prefix = g.empty_set();  // S_i
  prefix.set(out.decomposition.center);
  Color base = 0;  // k: colors spent on G[S_i]

  for (const auto& layer : out.decomposition.layers) {
    const VertexSet in_layer = to_vertex_set(g, layer);
    const std::vector<Vertex> xs = max_independent_in(g, in_layer);
    const int alpha = static_cast<int>(xs.size());
    out.layer_alphas.push_back(alpha);
    std::vector<int> x_index(g.order(), 0);
    for (int j = 0; j < alpha; ++j) x_index[xs[j]] = j + 1;
    VertexSet in_y = in_layer;
    for (Vertex x : xs) in_y.reset(x);
    const VertexSet in_x = in_layer - in_y;

    for (auto y = in_y.find_first(); y != VertexSet::npos; y = in_y.find_next(y)) {
      if (!g.neighbors(y).intersects(in_x) || !g.neighbors(y).intersects(prefix)) {
        throw ContractError("layer vertex " + std::to_string(y) + " lacks an X or prefix neighbor");
      }
    }

    const bool save = options.save_color && alpha >= 4;
    for (Vertex v : layer) {
      for (Vertex w : g.neighbor_list(v)) {
        const bool w_in_prefix = prefix.test(w);
        const bool w_in_layer = in_layer.test(w);
        if (!w_in_prefix && !w_in_layer) continue;  // next layer's business
        const int id = g.edge_id(v, w);
        if (w_in_layer && w < v) continue;  // each intra-layer edge once
        const int jv = x_index[v];
        const int jw = w_in_layer ? x_index[w] : 0;
        if (w_in_prefix) {
          colors[id] = jv ? base + jv + 2 : base + 1;
        } else if (jv || jw) {
          const int j = jv ? jv : jw;  // X is independent, so one endpoint is in Y
          colors[id] = (save && j == alpha) ? base + 3 : base + j + 3;
        } else {
          colors[id] = base + 2;
        }
      }
    }
    base += alpha + (save ? 2 : 3);
    prefix |= in_layer;
  }

  if (std::find(colors.begin(), colors.end(), 0) != colors.end()) {
    throw ContractError("layered construction left an edge uncolored");
  }
  out.coloring = EdgeColoring(g, std::move(colors)).compacted();
  verify_or_throw(g, out.coloring, "layered construction");
  out.colors_used = out.coloring.num_colors();
  return out;
}

}  // namespace rx3
