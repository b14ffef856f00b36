#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oraclegram {

/// Runs the command-line tool in-process. `args` excludes the program name.
/// Exit codes: 0 success, 1 usage or runtime error, 2 malformed input,
/// 3 budget exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace oraclegram
