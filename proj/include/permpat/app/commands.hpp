#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permpat::app {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,   // counterexample, cache mismatch
  kExitUsage = 2,    // bad flags or input
  kExitNetwork = 3,  // OEIS unreachable
};

/// Entry point of the permpat command line. `args` includes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permpat::app
