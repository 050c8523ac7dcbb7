#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperex::cli {

/// One verification outcome. `measured` is a nonnegative discrepancy (or a
/// violation count) compared against `tolerance`; `value` is the quantity
/// the check looked at.
struct Check {
  std::string suite;
  std::string name;
  double value = 0.0;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::optional<double> error_bar;
};

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 0;
  /// Overrides the per-check sample counts (random pairs, points, draws).
  std::optional<std::size_t> samples;
  /// Overrides the number of points in the monotonicity and strictness grids.
  std::optional<std::size_t> grid;
};

const std::vector<std::string>& suite_names();

/// Runs the named suite ("all" runs every suite in order). Throws
/// ValidationError for an unknown suite name.
std::vector<Check> run_verify(const VerifyOptions& options);

}  // namespace hyperex::cli
