#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wilsonid {

/// Process exit codes. Nothing else is ever returned.
enum ExitCode : int {
    kExitHolds = 0,
    kExitViolated = 1,
    kExitUsage = 2,
};

enum class Status;

/// holds -> 0, violated -> 1, error -> 2.
int exit_code_for(Status status);

/// Runs the command line tool in-process. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wilsonid
