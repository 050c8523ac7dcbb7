#pragma once

#include <iosfwd>

namespace hyperex::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Parses argv and dispatches to a subcommand, writing results to `out` and
/// diagnostics to `err`. Never throws; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperex::cli
