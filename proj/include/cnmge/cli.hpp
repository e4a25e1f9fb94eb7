#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cnmge::cli {

enum ExitCode : int { kAllSolved = 0, kSomeFailed = 1, kUsageError = 2 };

/// Benchmark harness entry point.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cnmge::cli
