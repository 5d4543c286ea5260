#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppers {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitInputError = 2 };

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppers
