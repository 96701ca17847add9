#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gengame {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitInputError = 2,
  kExitResourceLimit = 3,
};

/// Runs the command line `args` (without the program name). Reads
/// GEN_MAX_ORDER from the environment; --max-order takes precedence.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gengame
