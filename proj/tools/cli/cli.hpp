#pragma once

#include <ostream>

namespace vloci::cli {

/// Exit status of the command-line front end.
enum ExitStatus : int {
  kExitOk = 0,
  kExitInvalidScene = 2,
  kExitBadArguments = 3,
};

/// Parses argv, runs one subcommand and writes the JSON report to `out`.
/// Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vloci::cli
