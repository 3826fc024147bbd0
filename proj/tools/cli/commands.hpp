#pragma once

#include <iosfwd>

namespace quatype::cli {

// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kNonConvergence = 3,
};

// Parses argv (argv[0] is the program name), runs one subcommand and
// returns its exit code. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quatype::cli
