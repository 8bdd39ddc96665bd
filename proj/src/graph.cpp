#include "rx3/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "rx3/errors.hpp"

namespace rx3 {

namespace {

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> pairs) : n_(n) {
  if (n < 1) throw InputError("graph needs at least one vertex, got n=" + std::to_string(n));
  for (const Edge& e : pairs) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InputError("edge " + pair_text(e.u, e.v) + " has an endpoint outside 0.." +
                       std::to_string(n - 1));
    }
    if (e.u == e.v) throw InputError("edge " + pair_text(e.u, e.v) + " is a self-loop");
    edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adj_.assign(n, VertexSet(n));
  edge_ids_.assign(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const auto [u, v] = edges_[id];
    adj_[u].set(v);
    adj_[v].set(u);
    edge_ids_[u * n + v] = static_cast<int>(id);
    edge_ids_[v * n + u] = static_cast<int>(id);
  }
}

std::vector<Vertex> Graph::neighbor_list(Vertex v) const { return to_vertex_list(adj_[v]); }

Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, edges);
}

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::complete: return "complete";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::path: return "path";
    case FamilyKind::star: return "star";
    case FamilyKind::hairy_clique: return "hairy_clique";
  }
  return "unknown";
}

Graph build_named(NamedFamily family) {
  const int t = family.t;
  const int min_t =
      (family.kind == FamilyKind::path || family.kind == FamilyKind::star) ? 1 : 3;
  if (t < min_t) {
    throw InputError(family_name(family.kind) + " requires t >= " + std::to_string(min_t) +
                     ", got t=" + std::to_string(t));
  }

  std::vector<Edge> edges;
  switch (family.kind) {
    case FamilyKind::complete:
      for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) edges.push_back({u, v});
      return Graph(t, edges);
    case FamilyKind::cycle:
      for (int i = 0; i < t; ++i) edges.push_back({i, (i + 1) % t});
      return Graph(t, edges);
    case FamilyKind::path:
      for (int i = 0; i + 1 < t; ++i) edges.push_back({i, i + 1});
      return Graph(t, edges);
    case FamilyKind::star:
      for (int leaf = 1; leaf <= t; ++leaf) edges.push_back({0, leaf});
      return Graph(t + 1, edges);
    case FamilyKind::hairy_clique:
      for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) edges.push_back({u, v});
      for (int i = 0; i < t; ++i) edges.push_back({i, t + i});
      return Graph(2 * t, edges);
  }
  throw InputError("unknown family");
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> members(subset.begin(), subset.end());
  for (Vertex v : members) {
    if (!g.contains(v)) {
      throw InputError("vertex " + std::to_string(v) + " is not in a graph of order " +
                       std::to_string(g.order()));
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw InputError("induced subgraph of an empty vertex set");

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j]))
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  return {Graph(static_cast<int>(members.size()), edges), std::move(members)};
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source)) throw InputError("BFS source out of range");
  std::vector<int> dist(g.order(), kUnreachable);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    const VertexSet& nb = g.neighbors(u);
    for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        frontier.push(static_cast<Vertex>(v));
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError();
}

std::vector<Vertex> to_vertex_list(const VertexSet& set) {
  std::vector<Vertex> out;
  out.reserve(set.count());
  for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v))
    out.push_back(static_cast<Vertex>(v));
  return out;
}

VertexSet to_vertex_set(const Graph& g, std::span<const Vertex> vertices) {
  VertexSet set = g.empty_set();
  for (Vertex v : vertices) {
    if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
    set.set(v);
  }
  return set;
}

namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return pairs;
}

// BFS over 8-bit adjacency rows.
bool mask_connected(int n, std::span<const std::uint8_t> rows) {
  std::uint8_t seen = 1;
  std::uint8_t frontier = 1;
  const std::uint8_t full = static_cast<std::uint8_t>((1u << n) - 1);
  while (frontier) {
    std::uint8_t next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier & (1u << v)) next |= rows[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return (seen & full) == full;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kMaxEnumerationOrder) {
    throw CapExceededError("canonical form is limited to n <= " +
                           std::to_string(kMaxEnumerationOrder));
  }
  // Vertex invariant: degree, then the sorted degrees of the neighbors. Only
  // relabelings that list vertices in invariant order are tried.
  std::vector<std::vector<int>> key(n);
  for (Vertex v = 0; v < n; ++v) {
    key[v].push_back(g.degree(v));
    for (Vertex w : g.neighbor_list(v)) key[v].push_back(g.degree(w));
    std::sort(key[v].begin() + 1, key[v].end());
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end) runs of equal keys
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && key[order[j]] == key[order[i]]) ++j;
    cells.push_back({i, j});
    i = j;
  }

  std::uint64_t best = ~std::uint64_t{0};
  auto encode = [&] {
    std::uint64_t code = 0;
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if (g.adjacent(order[u], order[v])) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  };
  // Odometer over the permutations of every cell.
  std::function<void(std::size_t)> permute = [&](std::size_t cell) {
    if (cell == cells.size()) {
      encode();
      return;
    }
    const auto [lo, hi] = cells[cell];
    std::sort(order.begin() + lo, order.begin() + hi);
    do permute(cell + 1);
    while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  permute(0);
  return best;
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit,
                              EnumerateOptions options) {
  if (n < 1) throw InputError("enumeration needs n >= 1");
  if (n > kMaxEnumerationOrder) {
    throw CapExceededError("connected-graph enumeration is capped at n = " +
                           std::to_string(kMaxEnumerationOrder));
  }
  const std::vector<Edge> pairs = all_pairs(n);
  const std::uint32_t subsets = std::uint32_t{1} << pairs.size();
  std::unordered_set<std::uint64_t> seen_classes;
  std::vector<std::uint8_t> rows(n);
  std::vector<Edge> chosen;

  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    // A connected graph needs at least n-1 edges.
    if (std::popcount(mask) < n - 1) continue;
    std::fill(rows.begin(), rows.end(), 0);
    chosen.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        rows[pairs[i].u] |= static_cast<std::uint8_t>(1u << pairs[i].v);
        rows[pairs[i].v] |= static_cast<std::uint8_t>(1u << pairs[i].u);
        chosen.push_back(pairs[i]);
      }
    }
    if (options.up_to_isomorphism) {
      // Every class has a labeling with non-increasing degrees.
      bool sorted = true;
      for (int v = 1; v < n && sorted; ++v) sorted = std::popcount(rows[v - 1]) >= std::popcount(rows[v]);
      if (!sorted) continue;
    }
    if (!mask_connected(n, rows)) continue;
    Graph g(n, chosen);
    if (options.up_to_isomorphism && !seen_classes.insert(canonical_code(g)).second) continue;
    visit(g);
  }
}

std::vector<Graph> enumerate_connected(int n, EnumerateOptions options) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); }, options);
  return out;
}

}  // namespace rx3
