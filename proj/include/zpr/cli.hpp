#pragma once

#include <iosfwd>

namespace zpr::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kIterationCap = 3,
  kEnumerationCap = 4,
  kPropertyFailed = 5,
};

/// Runs one CLI invocation. Matrix arguments name files; "-" reads `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace zpr::cli
