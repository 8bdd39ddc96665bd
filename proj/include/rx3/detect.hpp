#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rx3/graph.hpp"

namespace rx3 {

/// Generic induced-subgraph search handles patterns up to this order. Stars and
/// paths use dedicated searches without the cap.
inline constexpr int kMaxPatternOrder = 8;

/// Maps H's vertices (by index) onto distinct vertices of G such that
/// adjacency and non-adjacency are both preserved. nullopt when G has no
/// induced copy of H.
std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& h);

/// True iff `embedding` is an induced copy of h in g.
bool is_induced_embedding(const Graph& g, const Graph& h, std::span<const Vertex> embedding);

struct FreenessEntry {
  bool free = true;
  std::vector<Vertex> witness;  // induced copy, vertex i of the member -> witness[i]
};

struct FreenessReport {
  std::vector<FreenessEntry> entries;  // one per family member, same order

  bool all_free() const;
  /// Index of the first member with an induced copy, or -1.
  int first_violation() const;
};

FreenessReport is_free(const Graph& g, std::span<const Graph> family);

/// Lexicographically least maximum clique (as a sorted vertex list).
std::vector<Vertex> max_clique(const Graph& g);

/// Lexicographically least maximum independent subset of `subset`.
std::vector<Vertex> max_independent_in(const Graph& g, std::span<const Vertex> subset);
std::vector<Vertex> max_independent_in(const Graph& g, const VertexSet& subset);

enum class Shape { p3, p4, star, path, hairy_fragment, other };

/// Recognized form of a connected forbidden graph.
///
/// `shape` follows the precedence p3, p4, star(r >= 3), path(l), then
/// hairy_fragment, then other; `param` carries r or l. `hairy_fragment` is
/// reported independently of `shape`: it holds iff the graph is an induced
/// subgraph of K_s^h for some s >= 3.
struct FamilyPattern {
  Shape shape = Shape::other;
  int param = 0;
  bool hairy_fragment = false;

  std::string describe() const;
};

/// Number of leaves if g is K_{1,r} with r >= 2, else 0.
int star_leaves(const Graph& g);
/// Number of vertices if g is a path, else 0.
int path_order(const Graph& g);
bool is_hairy_fragment(const Graph& g);

/// Throws DisconnectedError for a disconnected pattern.
FamilyPattern recognize_pattern(const Graph& h);

struct FamilyClassification {
  bool bounded = false;
  int subfamily = 0;         // 1, 2 or 3 when bounded, 0 otherwise
  std::vector<int> members;  // indices into the input family forming the match
};

/// Decides whether F contains {P3}, {K_{1,r}, P4} or {K_{1,r}, Y, P_l} with
/// r >= 3, Y an induced subgraph of some K_s^h (s >= 3), and l > 4.
FamilyClassification classify_family(std::span<const Graph> family);

}  // namespace rx3
