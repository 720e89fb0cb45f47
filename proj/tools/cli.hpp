#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace runyon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on `args` (program name excluded). Results go to `out`
/// unless --output names a file; diagnostics and help go to `err`/`out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace runyon::cli
