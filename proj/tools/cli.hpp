#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fcoh::cli {

enum ExitCode : int { kSuccess = 0, kInvalidInput = 1, kNumericalFailure = 2 };

/// Runs one command line (args[0] is the program name). Exit codes are
/// limited to kSuccess, kInvalidInput and kNumericalFailure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcoh::cli
