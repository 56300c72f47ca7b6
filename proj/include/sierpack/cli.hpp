#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sierpack {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_other = 1,
  exit_parse = 2,
  exit_precondition = 3,
  exit_verification = 4,
  exit_budget = 5,
};

/// Runs one command line (without the program name), writing the report to
/// `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sierpack
