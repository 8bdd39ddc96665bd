#include "rx3/rainbow.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "rx3/errors.hpp"
#include "spider_search.hpp"

namespace rx3 {

namespace {

// Dense 0-based color indices, plus the palette size.
std::pair<std::vector<int>, int> dense_colors(const EdgeColoring& coloring) {
  std::map<Color, int> index;
  for (Color c : coloring.colors()) index.emplace(c, 0);
  int next = 0;
  for (auto& [c, i] : index) i = next++;
  std::vector<int> dense;
  dense.reserve(coloring.edge_count());
  for (Color c : coloring.colors()) dense.push_back(index.at(c));
  return {std::move(dense), next};
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// True iff `edges` (ids) form a tree whose vertex set contains s.
bool forms_tree_over(const Graph& g, const std::vector<int>& edges, const TerminalTriple& s) {
  if (edges.empty()) return false;
  UnionFind uf(g.order());
  std::vector<bool> touched(g.order(), false);
  for (int id : edges) {
    const Edge e = g.edges()[id];
    if (!uf.unite(e.u, e.v)) return false;  // cycle
    touched[e.u] = touched[e.v] = true;
  }
  for (Vertex t : s.vertices())
    if (!touched[t]) return false;
  // Acyclic with |E| = |V'| - 1 means the touched vertices form one component.
  const auto vertices = std::count(touched.begin(), touched.end(), true);
  return static_cast<std::size_t>(vertices) == edges.size() + 1;
}

class Verifier {
 public:
  Verifier(const Graph& g, const EdgeColoring& coloring)
      : g_(g), dist_(all_pairs_distances(g)) {
    coloring.check_host(g);
    std::tie(dense_, palette_) = dense_colors(coloring);
  }

  std::optional<std::vector<int>> tree_for(const TerminalTriple& s) {
    std::vector<int> ids;
    const bool ok =
        palette_ <= 64
            ? detail::SpiderSearch<detail::WordColors>(g_, dist_).find(dense_, palette_, palette_,
                                                                       s, &ids)
            : detail::SpiderSearch<detail::WideColors>(g_, dist_).find(dense_, palette_, palette_,
                                                                       s, &ids);
    if (!ok) return std::nullopt;
    return ids;
  }

  RainbowCheck check_all() {
    const int n = g_.order();
    if (palette_ <= 64) return check_all_with<detail::WordColors>(n);
    return check_all_with<detail::WideColors>(n);
  }

 private:
  template <class Colors>
  RainbowCheck check_all_with(int n) {
    detail::SpiderSearch<Colors> search(g_, dist_);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex c = b + 1; c < n; ++c) {
          const TerminalTriple s(a, b, c);
          if (!search.find(dense_, palette_, palette_, s)) return {false, s};
        }
    return {true, std::nullopt};
  }

  const Graph& g_;
  DistanceMatrix dist_;
  std::vector<int> dense_;
  int palette_ = 0;
};

}  // namespace

std::optional<TreeCertificate> find_rainbow_tree(const Graph& g, const EdgeColoring& coloring,
                                                 const TerminalTriple& s) {
  s.check_host(g);
  require_connected(g);
  Verifier verifier(g, coloring);
  auto ids = verifier.tree_for(s);
  if (!ids) return std::nullopt;
  TreeCertificate cert{{}, s};
  for (int id : *ids) cert.edges.push_back(g.edges()[id]);
  std::sort(cert.edges.begin(), cert.edges.end());
  return cert;
}

bool validate_certificate(const Graph& g, const EdgeColoring& coloring,
                          const TreeCertificate& certificate) {
  coloring.check_host(g);
  std::vector<int> ids;
  std::set<Color> seen;
  for (const Edge& e : certificate.edges) {
    if (!g.contains(e.u) || !g.contains(e.v) || e.u == e.v) return false;
    const int id = g.edge_id(e.u, e.v);
    if (id < 0) return false;
    if (!seen.insert(coloring[id]).second) return false;
    ids.push_back(id);
  }
  return forms_tree_over(g, ids, certificate.terminals);
}

RainbowCheck is_3rainbow(const Graph& g, const EdgeColoring& coloring) {
  if (g.order() < 3) throw InputError("3-rainbow check needs at least 3 vertices");
  require_connected(g);
  return Verifier(g, coloring).check_all();
}

namespace {

class SubsetOracle {
 public:
  SubsetOracle(const Graph& g, const EdgeColoring& coloring, const TerminalTriple& s)
      : g_(g), coloring_(coloring), s_(s) {}

  bool run() { return search(0); }

 private:
  // Visits each subset of pairwise distinct colors once; a subset is tested
  // when its last edge is added.
  bool search(int from) {
    if (static_cast<int>(chosen_.size()) >= g_.order() - 1) return false;
    for (int id = from; id < g_.size(); ++id) {
      const Color c = coloring_[id];
      if (used_.count(c)) continue;
      used_.insert(c);
      chosen_.push_back(id);
      if (forms_tree_over(g_, chosen_, s_) || search(id + 1)) return true;
      chosen_.pop_back();
      used_.erase(c);
    }
    return false;
  }

  const Graph& g_;
  const EdgeColoring& coloring_;
  const TerminalTriple& s_;
  std::vector<int> chosen_;
  std::multiset<Color> used_;
};

}  // namespace

bool oracle_rainbow_tree_exists(const Graph& g, const EdgeColoring& coloring,
                                const TerminalTriple& s) {
  coloring.check_host(g);
  s.check_host(g);
  if (g.size() > kMaxOracleEdges) {
    throw CapExceededError("rainbow-tree oracle is limited to " +
                           std::to_string(kMaxOracleEdges) + " edges");
  }
  return SubsetOracle(g, coloring, s).run();
}

EdgeColoring spanning_tree_coloring(const Graph& g) {
  require_connected(g);
  std::vector<Color> colors(g.size(), 1);
  std::vector<bool> seen(g.order(), false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  Color next = 1;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbor_list(u)) {
      if (seen[w]) continue;
      seen[w] = true;
      colors[g.edge_id(u, w)] = next++;
      frontier.push(w);
    }
  }
  return EdgeColoring(g, std::move(colors));
}

}  // namespace rx3
