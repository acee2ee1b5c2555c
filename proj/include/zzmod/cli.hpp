#pragma once

#include <iosfwd>

namespace zzmod::cli {

// Exit codes shared by every subcommand: 0 success, 1 input error,
// 2 mathematical refusal or verification failure, 3 internal bug sentinel.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_refused = 2;
inline constexpr int exit_internal_bug = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Embedded acceptance corpus: golden instances plus oracle cross-checks.
/// Returns the number of failed cases and reports per-group counts.
int run_selfcheck(std::ostream& out);

} // namespace zzmod::cli
