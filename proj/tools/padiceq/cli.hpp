#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padiceq::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNotEquiangular = 2,
  kBoundFails = 3,
  kCounterexample = 4,
};

/// Runs the command line `args` (args[0] is the program name), writing
/// reports to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padiceq::cli
