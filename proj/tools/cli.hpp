#pragma once

#include <ostream>

namespace wa::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kViolated = 3;
inline constexpr int kNotStabilized = 4;
inline constexpr int kUnexpectedHolds = 5;

// Runs the command line; JSON goes to `out`, diagnostics and --pretty tables
// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wa::cli
