#pragma once

#include <algorithm>
#include <vector>

namespace rx3::detail {

/// Depth-first walk over restricted-growth strings of length `length` using
/// exactly `colors` distinct values.
///
/// `assign(pos, value)` is called after each position is set and may return
/// false to cut the subtree. `leaf()` is called on complete strings and
/// returns true to stop the walk. Returns true iff the walk was stopped.
template <class Assign, class Leaf>
class RestrictedGrowth {
 public:
  RestrictedGrowth(int length, int colors, Assign assign, Leaf leaf)
      : length_(length), colors_(colors), assign_(std::move(assign)), leaf_(std::move(leaf)),
        values_(length, 0) {}

  bool run() {
    if (colors_ < 1 || colors_ > length_) return false;
    return step(0, -1);
  }

  const std::vector<int>& values() const { return values_; }

 private:
  bool step(int pos, int max_used) {
    if (pos == length_) return leaf_();
    const int remaining_after = length_ - pos - 1;
    const int top = std::min(max_used + 1, colors_ - 1);
    for (int c = 0; c <= top; ++c) {
      const int new_max = std::max(max_used, c);
      // Every color up to colors-1 must still appear.
      if (colors_ - 1 - new_max > remaining_after) continue;
      values_[pos] = c;
      if (!assign_(pos, c)) continue;
      if (step(pos + 1, new_max)) return true;
    }
    return false;
  }

  int length_;
  int colors_;
  Assign assign_;
  Leaf leaf_;
  std::vector<int> values_;
};

}  // namespace rx3::detail
