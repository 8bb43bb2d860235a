#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace halin::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kFailed = 2,  // precondition or validation failure
  kLimit = 3,
};

/// Runs one command line (args excludes the program name). Results go to
/// `out`; diagnostics, progress and cache notes go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace halin::cli
