#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace declcmp::cli {

enum ExitCode : int {
  kTrue = 0,
  kFalse = 1,
  kUsage = 2,
  kRuntime = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// JSON error objects to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace declcmp::cli
