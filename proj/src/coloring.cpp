#include "rx3/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rx3/errors.hpp"

namespace rx3 {

EdgeColoring::EdgeColoring(const Graph& host, std::vector<Color> colors)
    : colors_(std::move(colors)) {
  check_host(host);
}

EdgeColoring EdgeColoring::all_distinct(const Graph& host) {
  std::vector<Color> colors(host.size());
  std::iota(colors.begin(), colors.end(), 1);
  return EdgeColoring(host, std::move(colors));
}

Color EdgeColoring::at(const Graph& host, Vertex u, Vertex v) const {
  const int id = host.edge_id(u, v);
  if (id < 0) {
    throw InputError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return colors_[id];
}

int EdgeColoring::num_colors() const {
  return static_cast<int>(std::set<Color>(colors_.begin(), colors_.end()).size());
}

Color EdgeColoring::max_color() const {
  return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

EdgeColoring EdgeColoring::compacted() const {
  std::map<Color, Color> relabel;
  for (Color c : colors_) relabel.emplace(c, 0);
  Color next = 1;
  for (auto& [from, to] : relabel) to = next++;
  EdgeColoring out;
  out.colors_.reserve(colors_.size());
  for (Color c : colors_) out.colors_.push_back(relabel.at(c));
  return out;
}

void EdgeColoring::check_host(const Graph& host) const {
  if (static_cast<int>(colors_.size()) != host.size()) {
    throw InputError("coloring covers " + std::to_string(colors_.size()) +
                     " edges but the graph has " + std::to_string(host.size()));
  }
  for (std::size_t id = 0; id < colors_.size(); ++id) {
    if (colors_[id] < 1) {
      const Edge e = host.edges()[id];
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has non-positive color " + std::to_string(colors_[id]));
    }
  }
}

}  // namespace rx3
