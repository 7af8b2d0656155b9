#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexmerge::cli {

/// Exit statuses of the command line tool.
enum ExitCode : int { kOk = 0, kValidationFailure = 1, kIoFailure = 2 };

/// Entry point of the `lexmerge` tool with subcommands merge, enrich,
/// validate and report. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lexmerge::cli
