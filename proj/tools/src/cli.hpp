#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rtint::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rtint::cli
