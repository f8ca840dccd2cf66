#pragma once

#include <iosfwd>

namespace ssd {

/// Exit codes of the ssdcc tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // a verification found mismatches, or a set is not shattered
  kExitUsage = 2,   // malformed input or incompatible options
  kExitBudget = 3,  // a size guard was hit
};

/// Entry point of the command-line tool; writes to the given streams
/// instead of the process's stdout/stderr so it can be driven from tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ssd
