#pragma once

// Rainbow spider search shared by the verifier and the exact solver.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rx3/graph.hpp"
#include "rx3/metrics.hpp"

namespace rx3::detail {

/// Marks an edge whose color is not fixed yet. A free edge consumes no color
/// from the used set but still counts against the edge budget.
inline constexpr int kFreeEdge = -1;

struct WordColors {
  std::uint64_t bits = 0;
  explicit WordColors(int) {}
  bool test(int c) const { return (bits >> c) & 1u; }
  void set(int c) { bits |= std::uint64_t{1} << c; }
  void reset(int c) { bits &= ~(std::uint64_t{1} << c); }
};

struct WideColors {
  boost::dynamic_bitset<std::uint64_t> bits;
  explicit WideColors(int palette) : bits(static_cast<std::size_t>(palette)) {}
  bool test(int c) const { return bits.test(c); }
  void set(int c) { bits.set(c); }
  void reset(int c) { bits.reset(c); }
};

/// Searches for a rainbow tree containing three terminals.
///
/// Any rainbow tree containing S prunes to a rainbow spider whose leaves are
/// terminals, so it suffices to try every center m and grow three legs from
/// m, pairwise vertex-disjoint apart from m, with all leg edges distinct in
/// color. A terminal equal to m gets a zero-length leg. Trees are capped at
/// `budget` edges (a rainbow tree never has more edges than colors).
template <class Colors>
class SpiderSearch {
 public:
  SpiderSearch(const Graph& g, const DistanceMatrix& dist) : g_(g), dist_(dist) {
    adj_.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) adj_.push_back(g.neighbor_list(v));
    used_vertex_.assign(g.order(), false);
  }

  /// `edge_colors[id]` is a dense color index in [0, palette) or kFreeEdge.
  /// On success, `tree` (if given) receives the edge ids of the spider.
  bool find(std::span<const int> edge_colors, int palette, int budget, const TerminalTriple& s,
            std::vector<int>* tree = nullptr) {
    colors_ = edge_colors;
    budget_ = budget;
    Colors used(std::max(palette, 1));
    path_.clear();
    for (Vertex m = 0; m < g_.order(); ++m) {
      const int lower = dist_[m][s[0]] + dist_[m][s[1]] + dist_[m][s[2]];
      if (dist_[m][s[0]] < 0 || dist_[m][s[1]] < 0 || dist_[m][s[2]] < 0) continue;
      if (lower > budget_) continue;
      center_ = m;
      // Farthest terminal first: its leg is the most constrained.
      targets_ = {s[0], s[1], s[2]};
      std::sort(targets_.begin(), targets_.end(),
                [&](Vertex a, Vertex b) { return dist_[m][a] > dist_[m][b]; });
      used_vertex_[m] = true;
      const bool ok = grow(0, m, used);
      used_vertex_[m] = false;
      if (ok) {
        // A successful grow returns without unwinding its marks.
        for (int id : path_) {
          used_vertex_[g_.edges()[id].u] = false;
          used_vertex_[g_.edges()[id].v] = false;
        }
        if (tree) *tree = path_;
        return true;
      }
    }
    return false;
  }

 private:
  int remaining_lower(int leg) const {
    int total = 0;
    for (int j = leg + 1; j < 3; ++j) total += dist_[center_][targets_[j]];
    return total;
  }

  bool grow(int leg, Vertex at, Colors& used) {
    if (leg == 3) return true;
    const Vertex target = targets_[leg];
    if (at == target) return grow(leg + 1, center_, used);
    // The target was swallowed by an earlier leg; another center covers that shape.
    if (at == center_ && used_vertex_[target]) return false;
    const int spent = static_cast<int>(path_.size());
    const int rest = remaining_lower(leg);
    for (Vertex w : adj_[at]) {
      if (used_vertex_[w]) continue;
      if (spent + 1 + dist_[w][target] + rest > budget_) continue;
      const int id = g_.edge_id(at, w);
      const int c = colors_[id];
      if (c != kFreeEdge && used.test(c)) continue;
      if (c != kFreeEdge) used.set(c);
      used_vertex_[w] = true;
      path_.push_back(id);
      if (grow(leg, w, used)) return true;
      path_.pop_back();
      used_vertex_[w] = false;
      if (c != kFreeEdge) used.reset(c);
    }
    return false;
  }

  const Graph& g_;
  const DistanceMatrix& dist_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<bool> used_vertex_;
  std::span<const int> colors_;
  int budget_ = 0;
  Vertex center_ = 0;
  std::array<Vertex, 3> targets_{};
  std::vector<int> path_;
};

}  // namespace rx3::detail
