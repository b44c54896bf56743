#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace elemop::cli {

enum ExitCode : int {
  kSuccess = 0,
  kRefuted = 1,  // NotLQN, oracle witness, or a certificate that fails
  kBadInput = 2,
  kUnknown = 3,
  kUnsupported = 4,
};

/// Runs one command line (without the program name). Every outcome,
/// including errors, is reported through the return code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elemop::cli
