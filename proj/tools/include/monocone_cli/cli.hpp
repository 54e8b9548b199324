#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monocone::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,
  kUsage = 2,
  kResourceCap = 3,
  kInvariantBreach = 4,
};

// args excludes the program name. Data goes to out, status and errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monocone::cli
