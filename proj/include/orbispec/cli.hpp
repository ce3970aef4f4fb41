#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbispec::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kNegativeResult = 3,  // a difference, a refutation or a failed golden check
};

// Runs the command line (without the program name) and returns the exit
// code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbispec::cli
