#include "rx3/detect.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <type_traits>

#include "rx3/errors.hpp"

namespace rx3 {

namespace {

// Bit-mask helpers so the backtracking searches run on plain words for small
// hosts and on dynamic bitsets otherwise.
struct WordOps {
  using Mask = std::uint64_t;
  static Mask empty(int) { return 0; }
  static Mask full(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
  static Mask from(const VertexSet& s) { return s.empty() ? 0 : s.to_ulong(); }
  static void set(Mask& m, int v) { m |= Mask{1} << v; }
  static bool test(const Mask& m, int v) { return (m >> v) & 1u; }
  static bool any(const Mask& m) { return m != 0; }
  static int count(const Mask& m) { return std::popcount(m); }
  static int first(const Mask& m) { return m ? std::countr_zero(m) : -1; }
  static int next(const Mask& m, int v) {
    if (v >= 63) return -1;
    const Mask rest = m & (~Mask{0} << (v + 1));
    return rest ? std::countr_zero(rest) : -1;
  }
};

struct SetOps {
  using Mask = VertexSet;
  static Mask empty(int n) { return VertexSet(n); }
  static Mask full(int n) { return ~VertexSet(n); }
  static Mask from(const VertexSet& s) { return s; }
  static void set(Mask& m, int v) { m.set(v); }
  static bool test(const Mask& m, int v) { return m.test(v); }
  static bool any(const Mask& m) { return m.any(); }
  static int count(const Mask& m) { return static_cast<int>(m.count()); }
  static int first(const Mask& m) {
    const auto v = m.find_first();
    return v == VertexSet::npos ? -1 : static_cast<int>(v);
  }
  static int next(const Mask& m, int v) {
    const auto w = m.find_next(v);
    return w == VertexSet::npos ? -1 : static_cast<int>(w);
  }
};

template <class Ops>
std::vector<typename Ops::Mask> adjacency_masks(const Graph& g) {
  std::vector<typename Ops::Mask> adj;
  adj.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj.push_back(Ops::from(g.neighbors(v)));
  return adj;
}

// H's vertices in BFS order from a maximum-degree vertex, so that (for a
// connected pattern) every vertex after the first has an earlier neighbor.
std::vector<Vertex> pattern_order(const Graph& h) {
  std::vector<Vertex> order;
  std::vector<bool> placed(h.order(), false);
  while (static_cast<int>(order.size()) < h.order()) {
    Vertex root = -1;
    for (Vertex v = 0; v < h.order(); ++v)
      if (!placed[v] && (root < 0 || h.degree(v) > h.degree(root))) root = v;
    std::queue<Vertex> frontier;
    frontier.push(root);
    placed[root] = true;
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      order.push_back(u);
      for (Vertex w : h.neighbor_list(u)) {
        if (!placed[w]) {
          placed[w] = true;
          frontier.push(w);
        }
      }
    }
  }
  return order;
}

template <class Ops>
class InducedSearch {
 public:
  using Mask = typename Ops::Mask;

  InducedSearch(const Graph& g, const Graph& h)
      : g_(g), h_(h), adj_(adjacency_masks<Ops>(g)), order_(pattern_order(h)),
        map_(h.order(), -1) {}

  std::optional<std::vector<Vertex>> run() {
    Mask used = Ops::empty(g_.order());
    if (extend(0, used)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth, Mask& used) {
    if (depth == order_.size()) return true;
    const Vertex hv = order_[depth];
    Mask cand = Ops::full(g_.order());
    cand &= ~used;
    for (std::size_t j = 0; j < depth; ++j) {
      const Vertex prev = order_[j];
      if (h_.adjacent(hv, prev)) {
        cand &= adj_[map_[prev]];
      } else {
        cand &= ~adj_[map_[prev]];
      }
    }
    const int need = h_.degree(hv);
    for (int v = Ops::first(cand); v >= 0; v = Ops::next(cand, v)) {
      if (g_.degree(v) < need) continue;
      map_[hv] = v;
      Ops::set(used, v);
      if (extend(depth + 1, used)) return true;
      if constexpr (std::is_same_v<Mask, std::uint64_t>) {
        used &= ~(Mask{1} << v);
      } else {
        used.reset(v);
      }
    }
    map_[hv] = -1;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Mask> adj_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
};

std::optional<std::vector<Vertex>> find_induced_generic(const Graph& g, const Graph& h) {
  if (g.order() <= 64) return InducedSearch<WordOps>(g, h).run();
  return InducedSearch<SetOps>(g, h).run();
}

// Lexicographically least maximum clique of the graph given by `nbr`
// restricted to `pool`, via branch and bound with a greedy-coloring bound.
class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<VertexSet>& nbr) : nbr_(nbr) {}

  std::vector<Vertex> run(const VertexSet& pool) {
    target_ = 0;
    std::vector<Vertex> current;
    find_size(current, pool);
    if (target_ == 0) return {};
    current.clear();
    found_.clear();
    find_least(current, pool);
    return found_;
  }

 private:
  int color_bound(const VertexSet& cand) const {
    VertexSet uncolored = cand;
    int colors = 0;
    while (uncolored.any()) {
      ++colors;
      VertexSet avail = uncolored;
      while (avail.any()) {
        const auto v = avail.find_first();
        uncolored.reset(v);
        avail.reset(v);
        avail -= nbr_[v];
      }
    }
    return colors;
  }

  void find_size(std::vector<Vertex>& current, VertexSet cand) {
    if (static_cast<int>(current.size()) > target_) target_ = static_cast<int>(current.size());
    while (cand.any()) {
      if (static_cast<int>(current.size()) + color_bound(cand) <= target_) return;
      const auto v = cand.find_first();
      cand.reset(v);
      current.push_back(static_cast<Vertex>(v));
      find_size(current, cand & nbr_[v]);
      current.pop_back();
    }
  }

  // Candidates are tried smallest id first, so the first clique of the
  // target size met is the lexicographically least one.
  bool find_least(std::vector<Vertex>& current, VertexSet cand) {
    if (static_cast<int>(current.size()) == target_) {
      found_ = current;
      return true;
    }
    while (cand.any()) {
      if (static_cast<int>(current.size()) + color_bound(cand) < target_) return false;
      const auto v = cand.find_first();
      cand.reset(v);
      current.push_back(static_cast<Vertex>(v));
      if (find_least(current, cand & nbr_[v])) return true;
      current.pop_back();
    }
    return false;
  }

  const std::vector<VertexSet>& nbr_;
  int target_ = 0;
  std::vector<Vertex> found_;
};

std::optional<std::vector<Vertex>> find_induced_star(const Graph& g, const Graph& h, int leaves) {
  Vertex hub = 0;
  while (h.degree(hub) != leaves) ++hub;
  const std::vector<Vertex> h_leaves = h.neighbor_list(hub);
  for (Vertex center = 0; center < g.order(); ++center) {
    if (g.degree(center) < leaves) continue;
    const auto independent = max_independent_in(g, g.neighbors(center));
    if (static_cast<int>(independent.size()) < leaves) continue;
    std::vector<Vertex> map(h.order());
    map[hub] = center;
    for (int i = 0; i < leaves; ++i) map[h_leaves[i]] = independent[i];
    return map;
  }
  return std::nullopt;
}

bool extend_induced_path(const Graph& g, std::vector<Vertex>& path, VertexSet& blocked,
                         int length) {
  if (static_cast<int>(path.size()) == length) return true;
  // A new vertex must be adjacent to the tail and to no earlier path vertex;
  // `blocked` holds the path plus the closed neighborhoods of all but the tail.
  VertexSet cand = g.neighbors(path.back()) - blocked;
  for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v)) {
    const VertexSet saved = blocked;
    blocked |= g.neighbors(path.back());
    blocked.set(path.back());
    blocked.set(v);
    path.push_back(static_cast<Vertex>(v));
    if (extend_induced_path(g, path, blocked, length)) return true;
    path.pop_back();
    blocked = saved;
  }
  return false;
}

std::optional<std::vector<Vertex>> find_induced_path(const Graph& g, const Graph& h, int length) {
  // Walk h from one end to get its vertex order.
  std::vector<Vertex> h_walk;
  Vertex at = 0;
  while (h.degree(at) > 1) ++at;
  Vertex prev = -1;
  while (true) {
    h_walk.push_back(at);
    Vertex next = -1;
    for (Vertex w : h.neighbor_list(at))
      if (w != prev) next = w;
    if (next < 0) break;
    prev = at;
    at = next;
  }

  for (Vertex start = 0; start < g.order(); ++start) {
    std::vector<Vertex> path{start};
    VertexSet blocked = g.empty_set();
    blocked.set(start);
    if (extend_induced_path(g, path, blocked, length)) {
      std::vector<Vertex> map(h.order());
      for (int i = 0; i < length; ++i) map[h_walk[i]] = path[i];
      return map;
    }
  }
  return std::nullopt;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace

std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return std::nullopt;
  if (h.size() > g.size()) return std::nullopt;
  if (is_connected(h)) {
    if (const int r = star_leaves(h); r >= 3) return find_induced_star(g, h, r);
    if (const int l = path_order(h); l >= 3) return find_induced_path(g, h, l);
  }
  if (h.order() > kMaxPatternOrder) {
    throw CapExceededError("induced-subgraph search is limited to patterns of order <= " +
                           std::to_string(kMaxPatternOrder) + ", got " +
                           std::to_string(h.order()));
  }
  return find_induced_generic(g, h);
}

bool is_induced_embedding(const Graph& g, const Graph& h, std::span<const Vertex> embedding) {
  if (static_cast<int>(embedding.size()) != h.order()) return false;
  std::vector<bool> hit(g.order(), false);
  for (Vertex v : embedding) {
    if (!g.contains(v) || hit[v]) return false;
    hit[v] = true;
  }
  for (Vertex a = 0; a < h.order(); ++a)
    for (Vertex b = a + 1; b < h.order(); ++b)
      if (h.adjacent(a, b) != g.adjacent(embedding[a], embedding[b])) return false;
  return true;
}

bool FreenessReport::all_free() const { return first_violation() < 0; }

int FreenessReport::first_violation() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (!entries[i].free) return static_cast<int>(i);
  return -1;
}

FreenessReport is_free(const Graph& g, std::span<const Graph> family) {
  FreenessReport report;
  report.entries.reserve(family.size());
  for (const Graph& h : family) {
    FreenessEntry entry;
    if (auto found = contains_induced(g, h)) {
      if (!is_induced_embedding(g, h, *found)) {
        throw ContractError("induced-subgraph search returned an invalid embedding");
      }
      entry.free = false;
      entry.witness = std::move(*found);
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<Vertex> max_clique(const Graph& g) {
  std::vector<VertexSet> nbr;
  nbr.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) nbr.push_back(g.neighbors(v));
  return CliqueSearch(nbr).run(g.all_vertices());
}

std::vector<Vertex> max_independent_in(const Graph& g, const VertexSet& subset) {
  if (static_cast<int>(subset.size()) != g.order()) {
    throw InputError("vertex subset does not match the graph order");
  }
  std::vector<VertexSet> nbr;
  nbr.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet non_adjacent = subset - g.neighbors(v);
    non_adjacent.reset(v);
    nbr.push_back(std::move(non_adjacent));
  }
  return CliqueSearch(nbr).run(subset);
}

std::vector<Vertex> max_independent_in(const Graph& g, std::span<const Vertex> subset) {
  return max_independent_in(g, to_vertex_set(g, subset));
}

int star_leaves(const Graph& g) {
  const int n = g.order();
  if (n < 3 || g.size() != n - 1) return 0;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return n - 1;
  return 0;
}

int path_order(const Graph& g) {
  const int n = g.order();
  if (g.size() != n - 1 || !is_connected(g)) return 0;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 2) return 0;
  return n;
}

bool is_hairy_fragment(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) return false;
  if (n <= 2) return true;
  // P3 and P4 need a core of two clique vertices, one of which has degree 1
  // in the fragment itself.
  if (path_order(g) == 3 || path_order(g) == 4) return true;
  // Otherwise every degree-1 vertex is a pendant: the rest must be a clique
  // and pendants must hang from distinct core vertices.
  std::vector<Vertex> core;
  std::vector<bool> attached(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 1) {
      core.push_back(v);
      continue;
    }
    const Vertex anchor = g.neighbor_list(v).front();
    if (g.degree(anchor) == 1 || attached[anchor]) return false;
    attached[anchor] = true;
  }
  return !core.empty() && is_clique(g, core);
}

std::string FamilyPattern::describe() const {
  std::string text;
  switch (shape) {
    case Shape::p3: text = "P3"; break;
    case Shape::p4: text = "P4"; break;
    case Shape::star: text = "K1," + std::to_string(param); break;
    case Shape::path: text = "P" + std::to_string(param); break;
    case Shape::hairy_fragment: text = "hairy-fragment"; break;
    case Shape::other: text = "other"; break;
  }
  if (hairy_fragment && shape != Shape::hairy_fragment) text += " (hairy-fragment)";
  return text;
}

FamilyPattern recognize_pattern(const Graph& h) {
  require_connected(h);
  FamilyPattern pattern;
  pattern.hairy_fragment = is_hairy_fragment(h);
  const int l = path_order(h);
  const int r = star_leaves(h);
  if (l == 3) {
    pattern.shape = Shape::p3;
    pattern.param = 3;
  } else if (l == 4) {
    pattern.shape = Shape::p4;
    pattern.param = 4;
  } else if (r >= 3) {
    pattern.shape = Shape::star;
    pattern.param = r;
  } else if (l >= 2) {
    pattern.shape = Shape::path;
    pattern.param = l;
  } else if (pattern.hairy_fragment) {
    pattern.shape = Shape::hairy_fragment;
  }
  return pattern;
}

FamilyClassification classify_family(std::span<const Graph> family) {
  std::vector<int> p3;
  std::vector<int> stars;
  std::vector<int> p4;
  std::vector<int> long_paths;
  std::vector<int> hairy;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Graph& h = family[i];
    if (!is_connected(h)) {
      throw DisconnectedError("family member " + std::to_string(i) + " is not connected");
    }
    const int idx = static_cast<int>(i);
    const int l = path_order(h);
    if (l == 3) p3.push_back(idx);
    if (l == 4) p4.push_back(idx);
    if (l > 4) long_paths.push_back(idx);
    if (star_leaves(h) >= 3) stars.push_back(idx);
    if (is_hairy_fragment(h)) hairy.push_back(idx);
  }

  if (!p3.empty()) return {true, 1, {p3.front()}};
  if (!stars.empty() && !p4.empty()) return {true, 2, {stars.front(), p4.front()}};
  if (!stars.empty() && !long_paths.empty()) {
    for (int y : hairy) {
      if (y != stars.front() && y != long_paths.front()) {
        return {true, 3, {stars.front(), y, long_paths.front()}};
      }
    }
  }
  return {};
}

}  // namespace rx3
