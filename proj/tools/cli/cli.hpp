#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coverkit::cli {

enum ExitCode : int {
  kOk = 0,
  kUnexpected = 1,
  kInputError = 2,
  kCapacityError = 3,
  kConsistencyError = 4,
};

/// Full command-line entry point. Writes results to `out` (or --out) and
/// diagnostics to `err`; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coverkit::cli
