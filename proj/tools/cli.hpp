#pragma once

#include <iosfwd>

namespace hlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Full command-line front end. Writes results to `out`, diagnostics and
/// usage to `err`, and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hlab::cli
