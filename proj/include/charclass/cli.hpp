#pragma once

#include <iosfwd>

namespace charclass {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitGenericity = 3,
  kExitUnsupported = 4,
  kExitInternal = 5,
  kExitIo = 6,
  kExitTimeout = 7,
  kExitBenchFailure = 8,
};

// Runs the `charclass` command line; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace charclass
