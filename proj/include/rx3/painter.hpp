#pragma once

#include <vector>

#include "rx3/bounds.hpp"
#include "rx3/coloring.hpp"
#include "rx3/graph.hpp"

namespace rx3 {

struct PainterOptions {
  /// Save one color when the independent part has >= 4 vertices by reusing
  /// the color of the first hub edge on the last one's edges into Y.
  bool save_color = false;
};

/// 3-rainbow coloring of K_n with 2 colors (n <= 5) or 3 colors (6 <= n <= 12),
/// found by seeded search and verified. Throws CapExceededError outside 3..12.
EdgeColoring color_complete_small(int n);

/// Vertex partition behind the (P4, K_{1,r})-free construction.
struct SXYPartition {
  std::vector<Vertex> clique;       // S: a maximum clique (dominating)
  std::vector<Vertex> independent;  // X = x_1..x_l: max independent set of G - S
  std::vector<Vertex> rest;         // Y = V - (S u X)
  Vertex hub = -1;                  // z in S, adjacent to every x_i
};

struct CliqueStarColoring {
  EdgeColoring coloring;  // colors 1..colors_used
  int colors_used = 0;
  SXYPartition partition;
};

/// Colors a connected (P4, K_{1,r})-free graph (n >= 3, r >= 3) with at most
/// l + 6 <= r + 5 colors, l = |X|:
///   z x_i -> i, x_i y -> i+1, E[S,Y] -> l+2, E(Y) -> l+3,
///   G[S] -> a 3-rainbow coloring of the clique from {l+4, l+5, l+6},
///   remaining edges -> 1.
/// Throws PreconditionError with an induced witness when G is not free, and
/// ContractError if the partition or the verified result breaks.
CliqueStarColoring color_p4_star_free(const Graph& g, int r, PainterOptions options = {});

/// BFS layers N^1(c), ..., N^ecc(c) around a central vertex c.
struct LayerDecomposition {
  Vertex center = 0;
  std::vector<std::vector<Vertex>> layers;
};

struct LayeredColoring {
  EdgeColoring coloring;  // colors 1..colors_used
  int colors_used = 0;
  std::vector<int> layer_alphas;  // independence number of each layer
  LayerDecomposition decomposition;
};

/// Colors a connected (K_{1,r}, K_s^h, P_l)-free graph layer by layer from a
/// central vertex, spending at most alpha_i + 3 new colors on layer i.
LayeredColoring color_layered(const Graph& g, const BoundParams& params,
                              PainterOptions options = {});

}  // namespace rx3
