#pragma once

#include <ostream>

namespace commdeg {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidAlgebra = 2,
  kExitParse = 3,
  kExitBadParameter = 4,
  kExitMethodMismatch = 5,
  kExitBudget = 6,
  kExitTheoremViolation = 7,
};

/// Entry point of the `commdeg` tool; argv[0] is the program name.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace commdeg
