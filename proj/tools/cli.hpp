#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace domgame::cli {

/// Runs one invocation. `args` excludes the program name. Writes one JSON
/// object (or the TSV sweep) to `out` and diagnostics to `err`.
///
/// Exit codes: 0 success, 1 solver refusal, size-guard refusal or failed
/// verification, 2 input or usage error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace domgame::cli
