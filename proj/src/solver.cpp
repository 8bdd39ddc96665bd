#include "rx3/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "restricted_growth.hpp"
#include "rx3/errors.hpp"
#include "rx3/metrics.hpp"
#include "rx3/rainbow.hpp"
#include "spider_search.hpp"

namespace rx3 {

BudgetExceededError::BudgetExceededError(int lower, Rx3Result best)
    : std::runtime_error("rx3 budget exceeded: value in [" + std::to_string(lower) + ", " +
                         std::to_string(best.value) + "]"),
      lower_(lower),
      best_(std::move(best)) {}

Rx3Bounds rx3_bounds(const Graph& g) {
  if (g.order() < 3) throw InputError("rx3 needs at least 3 vertices");
  require_connected(g);
  return {std::max(2, sdiam3(g)), g.order() - 1};
}

namespace {

struct Timeout {};

// Stirling number of the second kind, as a size estimate only.
double partitions_estimate(int items, int blocks) {
  std::vector<double> row(blocks + 1, 0.0);
  row[0] = 1.0;
  for (int i = 1; i <= items; ++i) {
    for (int k = std::min(i, blocks); k >= 1; --k) row[k] = k * row[k] + row[k - 1];
    row[0] = 0.0;
  }
  return row[blocks];
}

std::vector<TerminalTriple> all_triples(const Graph& g) {
  std::vector<TerminalTriple> triples;
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) triples.emplace_back(a, b, c);
  return triples;
}

// Search for a coloring with exactly `colors` classes. Colors are dense
// indices 0..colors-1; palettes here never exceed n-1, so one word suffices
// for n <= 65 and wider graphs fall back to the dynamic color set.
template <class Colors>
class PaletteSearch {
 public:
  PaletteSearch(const Graph& g, int colors, std::chrono::steady_clock::time_point deadline)
      : g_(g), colors_(colors), deadline_(deadline), dist_(all_pairs_distances(g)),
        spider_(g, dist_), edge_colors_(g.size(), detail::kFreeEdge) {
    // Edges grouped by their larger endpoint, so that finishing a group fixes
    // every edge inside the prefix of vertices 0..j.
    order_.resize(g.size());
    for (int id = 0; id < g.size(); ++id) order_[id] = id;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      const Edge ea = g.edges()[a];
      const Edge eb = g.edges()[b];
      return std::pair(ea.v, ea.u) < std::pair(eb.v, eb.u);
    });
    checkpoint_vertex_.assign(g.size(), -1);
    for (int pos = 0; pos < g.size(); ++pos) {
      const int j = g.edges()[order_[pos]].v;
      if (pos + 1 == g.size() || g.edges()[order_[pos + 1]].v != j) checkpoint_vertex_[pos] = j;
    }

    // Pendant-heavy triples first: they are the most constrained.
    triples_ = all_triples(g);
    std::stable_sort(triples_.begin(), triples_.end(),
                     [&](const TerminalTriple& a, const TerminalTriple& b) {
                       return pendant_count(a) > pendant_count(b);
                     });
  }

  /// Number of triples without a rainbow tree under `dense` (complete).
  int failures(const std::vector<int>& dense) {
    int count = 0;
    for (const auto& s : triples_)
      if (!spider_.find(dense, colors_, colors_, s)) ++count;
    return count;
  }

  bool valid(const std::vector<int>& dense) {
    for (std::size_t i = 0; i < triples_.size(); ++i) {
      if (!spider_.find(dense, colors_, colors_, triples_[i])) {
        // Move the failing triple to the front; failures cluster.
        std::rotate(triples_.begin(), triples_.begin() + static_cast<long>(i),
                    triples_.begin() + static_cast<long>(i) + 1);
        return false;
      }
    }
    return true;
  }

  std::optional<std::vector<int>> local_search(std::uint64_t seed, int iterations) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_edge(0, g_.size() - 1);
    std::uniform_int_distribution<int> pick_color(0, colors_ - 1);
    std::vector<int> dense(g_.size());
    for (auto& c : dense) c = pick_color(rng);
    int score = failures(dense);
    for (int it = 0; it < iterations && score > 0; ++it) {
      if ((it & 63) == 0) check_clock();
      const int e = pick_edge(rng);
      const int old = dense[e];
      const int fresh = pick_color(rng);
      if (fresh == old) continue;
      dense[e] = fresh;
      const int next = failures(dense);
      if (next <= score) {
        score = next;
      } else {
        dense[e] = old;
      }
    }
    if (score == 0) return dense;
    return std::nullopt;
  }

  std::optional<std::vector<int>> exhaustive() {
    std::optional<std::vector<int>> found;
    auto assign = [&](int pos, int c) {
      if ((++nodes_ & 4095) == 0) check_clock();
      edge_colors_[order_[pos]] = c;
      for (int later = pos + 1; later < g_.size(); ++later)
        edge_colors_[order_[later]] = detail::kFreeEdge;
      const int j = checkpoint_vertex_[pos];
      if (j < 0 || pos + 1 == g_.size()) return true;
      // Uncolored edges are wildcards here, so a failure is final.
      for (Vertex a = 0; a < j; ++a)
        for (Vertex b = a + 1; b < j; ++b)
          if (!spider_.find(edge_colors_, colors_, colors_, TerminalTriple(a, b, j))) return false;
      return true;
    };
    auto leaf = [&]() {
      if (!valid(edge_colors_)) return false;
      found = edge_colors_;
      return true;
    };
    detail::RestrictedGrowth walk(g_.size(), colors_, assign, leaf);
    walk.run();
    return found;
  }

 private:
  int pendant_count(const TerminalTriple& s) const {
    int count = 0;
    for (Vertex v : s.vertices()) count += g_.degree(v) == 1;
    return count;
  }

  void check_clock() const {
    if (std::chrono::steady_clock::now() > deadline_) throw Timeout{};
  }

  const Graph& g_;
  int colors_;
  std::chrono::steady_clock::time_point deadline_;
  DistanceMatrix dist_;
  detail::SpiderSearch<Colors> spider_;
  std::vector<int> order_;
  std::vector<int> checkpoint_vertex_;
  std::vector<int> edge_colors_;
  std::vector<TerminalTriple> triples_;
  std::uint64_t nodes_ = 0;
};

// Below this many candidate partitions the exhaustive walk is cheap enough
// that a randomized warm-up only costs time.
constexpr double kLocalSearchThreshold = 2e5;

template <class Colors>
std::optional<std::vector<int>> search_palette(const Graph& g, int colors,
                                               std::chrono::steady_clock::time_point deadline,
                                               std::uint64_t seed) {
  PaletteSearch<Colors> search(g, colors, deadline);
  if (partitions_estimate(g.size(), colors) > kLocalSearchThreshold) {
    if (auto hit = search.local_search(seed, 40 * g.size())) return hit;
  }
  return search.exhaustive();
}

}  // namespace

std::optional<EdgeColoring> find_3rainbow_coloring(const Graph& g, int colors,
                                                   std::chrono::steady_clock::time_point deadline,
                                                   std::uint64_t seed) {
  if (g.order() < 3) throw InputError("rx3 needs at least 3 vertices");
  require_connected(g);
  if (colors < 1 || colors > g.size()) return std::nullopt;

  std::optional<std::vector<int>> dense;
  try {
    dense = colors <= 64 ? search_palette<detail::WordColors>(g, colors, deadline, seed)
                         : search_palette<detail::WideColors>(g, colors, deadline, seed);
  } catch (const Timeout&) {
    throw BudgetExceededError(colors, {g.order() - 1, spanning_tree_coloring(g), false});
  }
  if (!dense) return std::nullopt;

  std::vector<Color> ids;
  ids.reserve(dense->size());
  for (int c : *dense) ids.push_back(c + 1);
  EdgeColoring coloring = EdgeColoring(g, std::move(ids)).compacted();
  if (!is_3rainbow(g, coloring).valid) {
    throw ContractError("palette search produced a coloring the verifier rejects");
  }
  return coloring;
}

Rx3Result rx3_exact(const Graph& g, const SolverOptions& options) {
  const Rx3Bounds bounds = rx3_bounds(g);
  const auto deadline = std::chrono::steady_clock::now() + options.budget;
  for (int t = bounds.lower; t < bounds.upper; ++t) {
    if (auto witness = find_3rainbow_coloring(g, t, deadline, options.seed + t)) {
      return {t, std::move(*witness), true};
    }
  }
  // Every smaller palette is refuted; a rainbow spanning tree meets n-1.
  return {bounds.upper, spanning_tree_coloring(g), true};
}

std::vector<std::vector<int>> canonical_colorings(int edges, int colors) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(std::max(edges, 0));
  auto assign = [&](int pos, int c) {
    current[pos] = c;
    return true;
  };
  auto leaf = [&]() {
    out.push_back(current);
    return false;
  };
  detail::RestrictedGrowth walk(edges, colors, assign, leaf);
  walk.run();
  return out;
}

}  // namespace rx3
