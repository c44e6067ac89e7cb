#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dcover::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kDomain = 2,
  kInternal = 3,
};

/// Runs one command line (without the program name). Payloads go to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcover::cli
