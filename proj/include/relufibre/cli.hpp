#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relufibre::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInput = 2,
  kNegative = 3,
  kUnknown = 4,
  kWidthCap = 5,
};

/// Runs one invocation of the command-line tool. `args` excludes the program
/// name. Results go to `out`, diagnostics to `err`; `in` backs the "-" input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace relufibre::cli
