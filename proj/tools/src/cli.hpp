#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nfw::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kNonpositiveCoefficient = 3,
  kBudgetViolation = 4,
  kBoundViolation = 5,
};

// Runs the command line `args` (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nfw::cli
