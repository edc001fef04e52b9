#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nichols {

/// Exit codes of run_command.
enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitComputation = 2, kExitParse = 3 };

/// Runs one CLI invocation; args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nichols
