#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftbell {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

// Runs the command line `shiftbell <args...>` (args exclude the program
// name) and returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftbell
