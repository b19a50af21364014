#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace raywig::cli {

/// Run the raywig command line on the given arguments (without the program
/// name), writing reports to out and diagnostics to err.
///
/// Exit codes: 0 success, 2 input/validation failure, 3 degenerate geometry,
/// 4 hypothesis violation (the map is not an isometry).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raywig::cli
