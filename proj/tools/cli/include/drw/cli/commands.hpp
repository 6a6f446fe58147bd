#pragma once

#include <ostream>

namespace drw::cli {

/// Exit codes of the drw tool.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the drw command line; the process entry point only forwards to this.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace drw::cli
