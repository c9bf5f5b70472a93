#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loewy {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,
  kExitParse = 2,
  kExitHypothesis = 3,
};

/// Runs the command-line tool with the given arguments (argv[0] excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loewy
