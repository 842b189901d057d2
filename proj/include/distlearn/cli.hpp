#pragma once

#include <iosfwd>

namespace distlearn {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // bad flags or experiment file
  kExitData = 2,        // missing, corrupt or unverifiable data
  kExitDiverged = 3,    // every failed run diverged
  kExitInternal = 4,    // anything else, including gradient check failures
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace distlearn
