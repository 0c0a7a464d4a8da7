#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace breadthkit::cli {

/// Stable exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kInvalidDecomposition = 1,
  kInputError = 2,
  kPreconditionFailed = 3,
  kCounterexample = 4,
};

/// Runs one subcommand. `args` excludes the program name. Documents and
/// tables go to `out`, summaries and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace breadthkit::cli
