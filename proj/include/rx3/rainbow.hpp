#pragma once

#include <optional>
#include <vector>

#include "rx3/coloring.hpp"
#include "rx3/graph.hpp"
#include "rx3/metrics.hpp"

namespace rx3 {

/// A tree (edge list) claimed to connect `terminals` rainbowly.
struct TreeCertificate {
  std::vector<Edge> edges;
  TerminalTriple terminals;
};

/// Finds a rainbow tree of (g, coloring) containing the terminals, if any.
/// Requires g connected; throws InputError when the coloring does not fit g.
std::optional<TreeCertificate> find_rainbow_tree(const Graph& g, const EdgeColoring& coloring,
                                                 const TerminalTriple& s);

/// Independent check: the edges exist, form a tree, cover the terminals and
/// carry pairwise distinct colors.
bool validate_certificate(const Graph& g, const EdgeColoring& coloring,
                          const TreeCertificate& certificate);

struct RainbowCheck {
  bool valid = false;
  std::optional<TerminalTriple> failing_triple;  // lexicographically first
};

/// Whether every vertex triple has a rainbow tree. Needs n >= 3, connected.
RainbowCheck is_3rainbow(const Graph& g, const EdgeColoring& coloring);

inline constexpr int kMaxOracleEdges = 20;

/// Brute force over edge subsets with distinct colors; shares no code with
/// find_rainbow_tree. Throws CapExceededError above kMaxOracleEdges edges.
bool oracle_rainbow_tree_exists(const Graph& g, const EdgeColoring& coloring,
                                const TerminalTriple& s);

/// Colors 1..n-1 on a BFS spanning tree from vertex 0, color 1 elsewhere.
/// Always 3-rainbow for a connected graph.
EdgeColoring spanning_tree_coloring(const Graph& g);

}  // namespace rx3
