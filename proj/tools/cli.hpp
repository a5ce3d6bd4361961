#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pfmsf::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kShape = 3,
};

/// Runs the pfmsf command line with args (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pfmsf::cli
