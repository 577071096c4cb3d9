#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simpfib {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitUsage = 2,
};

/// Runs the command line `args` (without the program name) and returns the
/// exit code. Reports go to `out` unless --out names a file.
int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

}  // namespace simpfib
