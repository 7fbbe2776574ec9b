#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclebetti {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitCapExceeded = 3,
};

/// Runs the command line `args` (without the program name) and returns the
/// exit code. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclebetti
