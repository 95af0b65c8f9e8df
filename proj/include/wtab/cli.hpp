#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wtab {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUndefined = 1, kExitInvalid = 2 };

/// Runs the `wtab` command line. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wtab
