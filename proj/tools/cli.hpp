#pragma once

#include <iosfwd>

namespace tsirelson::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kVerification = 3 };

/// Runs the command line; output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tsirelson::cli
