#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cstar {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitDomain = 3 };

/// Runs the `cstar` command line on `args` (without the program name).
/// Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cstar
