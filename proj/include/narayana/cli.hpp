#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace narayana::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCounterexample = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace narayana::cli
