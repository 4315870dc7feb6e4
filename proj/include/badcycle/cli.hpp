#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace badcycle {

enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitInputError = 2,
  kExitBudget = 3,
};

// Runs the command line `args` (without the program name), writing the
// report to out and diagnostics to err. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace badcycle
