#include "rx3/metrics.hpp"

#include <algorithm>
#include <limits>

#include "rx3/errors.hpp"

namespace rx3 {

TerminalTriple::TerminalTriple(Vertex a, Vertex b, Vertex c) : v_{a, b, c} {
  std::sort(v_.begin(), v_.end());
  if (v_[0] == v_[1] || v_[1] == v_[2]) {
    throw InputError("terminal triple needs three distinct vertices");
  }
}

void TerminalTriple::check_host(const Graph& g) const {
  for (Vertex v : v_) {
    if (!g.contains(v)) {
      throw InputError("terminal " + std::to_string(v) + " is not a vertex of the graph");
    }
  }
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dist;
  dist.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) dist.push_back(bfs_distances(g, v));
  return dist;
}

namespace {

// Returns {best total, median vertex}; total is max() when no vertex reaches all three.
std::pair<int, Vertex> best_median(const DistanceMatrix& dist, const TerminalTriple& s) {
  const auto& d0 = dist[s[0]];
  const auto& d1 = dist[s[1]];
  const auto& d2 = dist[s[2]];
  int best = std::numeric_limits<int>::max();
  Vertex median = -1;
  for (std::size_t m = 0; m < d0.size(); ++m) {
    if (d0[m] == kUnreachable || d1[m] == kUnreachable || d2[m] == kUnreachable) continue;
    const int total = d0[m] + d1[m] + d2[m];
    if (total < best) {
      best = total;
      median = static_cast<Vertex>(m);
    }
  }
  return {best, median};
}

}  // namespace

int steiner_distance3(const DistanceMatrix& dist, const TerminalTriple& s) {
  const auto [best, median] = best_median(dist, s);
  if (median < 0) throw DisconnectedError("terminals lie in different components");
  return best;
}

int steiner_distance3(const Graph& g, const TerminalTriple& s) {
  s.check_host(g);
  DistanceMatrix dist(g.order());
  for (Vertex t : s.vertices()) dist[t] = bfs_distances(g, t);
  return steiner_distance3(dist, s);
}

std::vector<Edge> steiner_tree3(const Graph& g, const TerminalTriple& s) {
  s.check_host(g);
  DistanceMatrix dist(g.order());
  for (Vertex t : s.vertices()) dist[t] = bfs_distances(g, t);
  const auto [best, median] = best_median(dist, s);
  if (median < 0) throw DisconnectedError("terminals lie in different components");

  // Walk from the median down each terminal's distance gradient. Legs of a
  // median spider are internally disjoint, otherwise a cheaper median exists.
  std::vector<Edge> edges;
  for (Vertex t : s.vertices()) {
    Vertex at = median;
    while (at != t) {
      const VertexSet& nb = g.neighbors(at);
      for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w)) {
        if (dist[t][w] == dist[t][at] - 1) {
          edges.push_back({std::min<Vertex>(at, w), std::max<Vertex>(at, w)});
          at = static_cast<Vertex>(w);
          break;
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (static_cast<int>(edges.size()) != best) {
    throw ContractError("median spider legs overlap; Steiner witness inconsistent");
  }
  return edges;
}

int sdiam3(const Graph& g) {
  if (g.order() < 3) throw InputError("3-Steiner diameter needs at least 3 vertices");
  require_connected(g);
  const DistanceMatrix dist = all_pairs_distances(g);
  const int n = g.order();
  int best = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        best = std::max(best, steiner_distance3(dist, TerminalTriple(a, b, c)));
  return best;
}

EccentricityReport ecc_rad_diam(const Graph& g) {
  require_connected(g);
  EccentricityReport report;
  report.eccentricities.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto dist = bfs_distances(g, v);
    report.eccentricities.push_back(*std::max_element(dist.begin(), dist.end()));
  }
  const auto& ecc = report.eccentricities;
  const auto min_it = std::min_element(ecc.begin(), ecc.end());
  report.radius = *min_it;
  report.diameter = *std::max_element(ecc.begin(), ecc.end());
  report.central_vertex = static_cast<Vertex>(min_it - ecc.begin());
  return report;
}

std::vector<std::vector<Vertex>> distance_layers(const Graph& g, Vertex center) {
  const auto dist = bfs_distances(g, center);
  const int ecc = *std::max_element(dist.begin(), dist.end());
  std::vector<std::vector<Vertex>> layers(std::max(ecc, 0));
  for (Vertex v = 0; v < g.order(); ++v)
    if (dist[v] > 0) layers[dist[v] - 1].push_back(v);
  return layers;
}

}  // namespace rx3
