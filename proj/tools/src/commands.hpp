#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conesing::cli {

/// Exit codes of the conesing CLI.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kPreconditionError = 3,
  kInternalError = 4,
};

/// Runs the CLI on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conesing::cli
