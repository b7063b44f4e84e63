#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grt::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,          // classification not Grt, or an identity failed
  kArithmeticFailure = 2, // multiplication rule could not generate the triangle
  kInapplicable = 3,      // a requested check does not apply to these params
  kUsage = 64,
  kMalformedInput = 65,
};

/// Runs the `grt` command line with `args` (program name excluded). Stdin is
/// read from `in` when --input is "-". Output is written once the command
/// completes.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace grt::cli
