#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsat::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs the `rsat` command line. `args` excludes the program name. Files
/// named "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace rsat::cli
