#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubemax::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kBadInput = 2,        // unparsable matrix file or bad flags
  kTooLarge = 3,        // exhaustive evaluation refused (use --force)
  kSearchFailed = 4,    // every search restart failed
  kUnknownEntry = 5,    // catalog name not found
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubemax::cli
