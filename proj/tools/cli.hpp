#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fibcat::cli {

/// Exit codes: 0 all checks passed, 1 some check failed, 2 usage or input error.
enum Exit : int { ok = 0, checks_failed = 1, usage = 2 };

/// Runs one command line (without the program name). The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibcat::cli
