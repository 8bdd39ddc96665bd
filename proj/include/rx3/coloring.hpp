#pragma once

#include <vector>

#include "rx3/graph.hpp"

namespace rx3 {

using Color = int;

/// Total edge coloring of a host graph, indexed by the host's edge ids.
///
/// Color ids are positive. `num_colors()` counts distinct ids; `compacted()`
/// relabels them onto 1..t preserving their relative order.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  /// Throws InputError when `colors` does not cover every edge of `host`
  /// exactly once or holds a non-positive id.
  EdgeColoring(const Graph& host, std::vector<Color> colors);

  /// Color i+1 on edge i.
  static EdgeColoring all_distinct(const Graph& host);

  Color operator[](int edge_id) const { return colors_[edge_id]; }
  Color at(const Graph& host, Vertex u, Vertex v) const;

  int edge_count() const noexcept { return static_cast<int>(colors_.size()); }
  const std::vector<Color>& colors() const noexcept { return colors_; }

  int num_colors() const;
  Color max_color() const;

  EdgeColoring compacted() const;

  /// Throws InputError unless this coloring fits `host`.
  void check_host(const Graph& host) const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Color> colors_;
};

}  // namespace rx3
