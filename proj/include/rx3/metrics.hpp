#pragma once

#include <array>
#include <vector>

#include "rx3/graph.hpp"

namespace rx3 {

/// Three distinct terminal vertices, stored sorted.
class TerminalTriple {
 public:
  /// Throws InputError if the vertices are not pairwise distinct.
  TerminalTriple(Vertex a, Vertex b, Vertex c);

  Vertex operator[](int i) const { return v_[i]; }
  const std::array<Vertex, 3>& vertices() const noexcept { return v_; }

  /// Throws InputError if any terminal is not a vertex of `g`.
  void check_host(const Graph& g) const;

  friend auto operator<=>(const TerminalTriple&, const TerminalTriple&) = default;

 private:
  std::array<Vertex, 3> v_;
};

/// All-pairs BFS distances; dist[u][v] is kUnreachable across components.
using DistanceMatrix = std::vector<std::vector<int>>;
DistanceMatrix all_pairs_distances(const Graph& g);

/// Size of a smallest tree of `g` containing the three terminals.
///
/// A minimal tree on three terminals is a spider, so the answer is the
/// minimum over vertices m of d(m,a) + d(m,b) + d(m,c).
int steiner_distance3(const Graph& g, const TerminalTriple& s);
int steiner_distance3(const DistanceMatrix& dist, const TerminalTriple& s);

/// Edge list of one minimum tree containing the terminals (median spider).
std::vector<Edge> steiner_tree3(const Graph& g, const TerminalTriple& s);

/// Maximum Steiner distance over all triples. Needs n >= 3 and connectivity.
int sdiam3(const Graph& g);

struct EccentricityReport {
  std::vector<int> eccentricities;
  int radius = 0;
  int diameter = 0;
  Vertex central_vertex = 0;  // least id with ecc == radius
};

EccentricityReport ecc_rad_diam(const Graph& g);

/// N^i(c) for i = 1..ecc(c): layers[i-1] holds the vertices at distance i.
std::vector<std::vector<Vertex>> distance_layers(const Graph& g, Vertex center);

}  // namespace rx3
