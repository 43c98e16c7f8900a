#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vmcat {

enum ExitStatus : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitParseError = 2,
  kExitDomainError = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit status. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vmcat
