#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eft::cli {

/// Exit codes: 0 success, 1 a VIOLATION/MISMATCH or failed check, 2 usage or
/// runtime error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace eft::cli
