#pragma once

#include <iosfwd>

namespace qcap::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kFailed = 2 };

/// Runs the qcap command line. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcap::cli
