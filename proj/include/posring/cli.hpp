#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posring {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitError = 2 };

/// Runs the tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posring
