#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cquant::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kHypothesisViolation = 2,
  kVerificationFailure = 3,
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Subcommands: uniquantile, region, tukey, depth, verify.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cquant::cli
