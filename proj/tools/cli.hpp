#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lincolor::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Entry point behind the `lincolor` executable. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lincolor::cli
