#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agx::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

/// Runs one command line (args[0] is the program name) against the given streams.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace agx::cli
