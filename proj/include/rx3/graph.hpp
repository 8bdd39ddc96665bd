#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rx3 {

using Vertex = int;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Unordered vertex pair, stored with u < v once normalized by Graph.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are kept sorted lexicographically with
/// u < v; an edge's position in `edges()` is its id, which is how colorings
/// index edges. Adjacency is held as one bitset per vertex.
class Graph {
 public:
  /// Edgeless graph on a single vertex.
  Graph() : Graph(1) {}

  /// Validates and normalizes `pairs`: duplicates (in either orientation)
  /// collapse, self-loops and out-of-range endpoints throw InputError.
  explicit Graph(int n, std::span<const Edge> pairs = {});

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].count()); }
  std::vector<Vertex> neighbor_list(Vertex v) const;

  /// Id of edge {u,v}, or -1 when absent.
  int edge_id(Vertex u, Vertex v) const { return edge_ids_[u * n_ + v]; }

  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet all_vertices() const { return ~VertexSet(n_); }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
  std::vector<int> edge_ids_;
};

/// Builds a graph from raw pairs; see Graph's constructor for the rules.
Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs);

enum class FamilyKind { complete, cycle, path, star, hairy_clique };

/// A named parametric family member. `t` is the family's size parameter:
/// K_t, C_t, P_t (t vertices), K_{1,t} (t leaves), K_t^h (K_t plus t pendants).
struct NamedFamily {
  FamilyKind kind = FamilyKind::complete;
  int t = 3;
};

/// Canonical labeled instance of a named family.
///   complete/cycle/path: vertices 0..t-1 in order (cycle closes t-1 -> 0)
///   star: hub 0, leaves 1..t
///   hairy_clique: clique 0..t-1, pendant of clique vertex i is t+i
Graph build_named(NamedFamily family);

std::string family_name(FamilyKind kind);

/// G[A] together with the host id of every vertex of the subgraph.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;
};

/// Vertices of `subset` are sorted and deduplicated; subgraph vertex i is the
/// i-th smallest member of `subset`.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

inline constexpr int kUnreachable = -1;

std::vector<int> bfs_distances(const Graph& g, Vertex source);
bool is_connected(const Graph& g);

/// Throws DisconnectedError unless `g` is connected.
void require_connected(const Graph& g);

std::vector<Vertex> to_vertex_list(const VertexSet& set);
VertexSet to_vertex_set(const Graph& g, std::span<const Vertex> vertices);

inline constexpr int kMaxEnumerationOrder = 7;

struct EnumerateOptions {
  /// Yield one representative per isomorphism class: the first labeled copy
  /// with non-increasing degrees met in edge-mask order.
  bool up_to_isomorphism = false;
};

/// Visits every labeled connected graph on exactly n vertices once, in
/// increasing order of edge mask (bit i of the mask selects the i-th pair in
/// lexicographic order). Throws CapExceededError for n > 7.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit,
                              EnumerateOptions options = {});

std::vector<Graph> enumerate_connected(int n, EnumerateOptions options = {});

/// Isomorphism-invariant code (n <= 7): the adjacency bits minimized over
/// relabelings that order vertices by degree and neighbor degrees.
std::uint64_t canonical_code(const Graph& g);

}  // namespace rx3
