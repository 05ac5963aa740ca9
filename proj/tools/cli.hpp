#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace occupancy::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kLimit = 3,
  kOracleMismatch = 4,
};

inline constexpr const char* kSchemaVersion = "1.0";

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace occupancy::cli
