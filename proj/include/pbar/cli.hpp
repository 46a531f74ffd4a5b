#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbar {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitCounterexample = 1, kExitUsage = 2 };

enum class OutputFormat { Json, Csv, Table };

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics and timing to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pbar
