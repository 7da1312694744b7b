#pragma once

#include <ostream>

namespace bergesat::cli {

// Exit codes.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;

/// Parses argv, runs one subcommand, prints a single JSON object to `out`
/// and a human summary to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bergesat::cli
