#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace templia {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // the run itself failed (I/O, degenerate result)
inline constexpr int kExitUsage = 2;    // invalid flags or parameter values

/// Runs the `templia` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace templia
