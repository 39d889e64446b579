#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cidr::cli {

/// Runs the command line `args` (args[0] is the program name). Logs go to
/// `err`; `out` only receives the single value printed in --quiet mode.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cidr::cli
