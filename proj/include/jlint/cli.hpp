#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jlint {

/// Exit codes: 0 pass, 1 input error, 2 mathematical failure or flag.
enum ExitCode : int { kExitPass = 0, kExitInputError = 1, kExitMathFlag = 2 };

/// Runs the command line `jlint <args...>` (args exclude the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jlint
