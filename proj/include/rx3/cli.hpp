#pragma once

#include <chrono>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rx3/graph.hpp"

namespace rx3::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 1,
  kVerificationFailed = 2,
  kPreconditionViolated = 3,
  kBudgetExceeded = 4,
};

/// Runs one command line (without the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Pattern mini-language: P<l>, K1,<r>, K<s>h, C<n>, K<n>, or @file.
Graph parse_pattern(std::string_view token);

/// Names of the standard freeness battery, in report order.
std::span<const std::string_view> battery_names();

struct AnalysisReport {
  int n = 0;
  int m = 0;
  int sdiam3 = 0;
  int rx3_lower = 0;
  int rx3_upper = 0;
  std::optional<int> rx3_exact;
  bool exhausted = true;  // false: [rx3_lower, rx3_upper] is the best bracket found
  std::vector<std::pair<std::string, bool>> free_of;
  int radius = 0;
  int diameter = 0;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// With `exact`, a budget overrun narrows the bracket instead of throwing.
AnalysisReport analyze(const Graph& g, bool exact, std::chrono::milliseconds budget);

struct ReproRow {
  std::string claim;
  std::string params;
  std::string published;
  std::string computed;
  std::string verdict;  // match, mismatch or bound-satisfied
  std::string note;
};

std::vector<ReproRow> reproduce(std::chrono::milliseconds budget);
std::string reproduce_csv(const std::vector<ReproRow>& rows);

}  // namespace rx3::cli
