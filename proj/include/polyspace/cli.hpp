#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyspace {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,   ///< a validation run found failures
    kExitSingular = 2,  ///< non-generic length vector or segment
    kExitEmpty = 3,     ///< empty polygon space where a nonempty one is needed
    kExitUsage = 4,
};

/// Runs one CLI invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyspace
