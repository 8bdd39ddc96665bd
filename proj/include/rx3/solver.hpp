#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rx3/coloring.hpp"
#include "rx3/graph.hpp"

namespace rx3 {

struct Rx3Bounds {
  int lower = 0;  // max(2, sdiam3)
  int upper = 0;  // n - 1
};

/// Needs a connected graph with n >= 3.
Rx3Bounds rx3_bounds(const Graph& g);

struct Rx3Result {
  int value = 0;
  EdgeColoring witness;  // colors 1..value
  bool exhausted = false;
};

struct SolverOptions {
  std::chrono::milliseconds budget{60'000};
  /// Seed for the randomized witness search tried before exhaustive search.
  std::uint64_t seed = 0x5eed;
};

/// Raised when the time budget runs out. Every palette below `lower` was
/// refuted exhaustively; `best` holds a verified coloring with `best.value`
/// colors (exhausted = false).
class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(int lower, Rx3Result best);

  int lower() const noexcept { return lower_; }
  const Rx3Result& best() const noexcept { return best_; }

 private:
  int lower_;
  Rx3Result best_;
};

/// Exact 3-rainbow index.
///
/// Palette sizes are tried upward from the lower bound. For each size t the
/// search runs over colorings in restricted-growth form (edge i gets a color
/// at most one above the largest used by edges 0..i-1), so each partition of
/// the edges into t color classes is met once; only colorings reaching
/// exactly t classes are verified.
Rx3Result rx3_exact(const Graph& g, const SolverOptions& options = {});

/// A verified 3-rainbow coloring using exactly `colors` colors, or nothing if
/// none exists. Exhaustive unless the deadline passes (BudgetExceededError).
std::optional<EdgeColoring> find_3rainbow_coloring(
    const Graph& g, int colors, std::chrono::steady_clock::time_point deadline,
    std::uint64_t seed = 0x5eed);

/// Every restricted-growth string of length `edges` with exactly `colors`
/// distinct values (0-based), in lexicographic order. This is the candidate
/// stream the exact search walks, exposed for testing.
std::vector<std::vector<int>> canonical_colorings(int edges, int colors);

}  // namespace rx3
