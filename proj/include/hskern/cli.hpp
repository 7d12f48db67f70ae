#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hskern {

/// Exit codes of the hskern tool.
enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

/// Runs `hskern <args...>` (args excludes the program name). Normal output
/// goes to `out`, diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hskern
