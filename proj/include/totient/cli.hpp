#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace totient::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded) and returns the
/// process exit code: 0 success, 1 runtime or correctness failure, 2 usage
/// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace totient::cli
