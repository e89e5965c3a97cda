#pragma once

#include <iosfwd>

namespace qsum::cli {

/// Exit codes shared by every command.
enum ExitCode : int { kPass = 0, kUsage = 1, kMismatch = 2, kPoleOrDomain = 3 };

/// Runs the qsum command line. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsum::cli
