#pragma once

#include <iosfwd>

namespace qsinc::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInvalidParams = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;

/// Runs one qsinc command. Data goes to `out`, diagnostics to `err`; the
/// return value is the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsinc::cli
