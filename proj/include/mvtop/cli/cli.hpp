#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvtop {

enum ExitCode : int { ExitPass = 0, ExitCheckFailed = 1, ExitUnsupported = 2, ExitMalformed = 3 };

/// args excludes the program name. Reports go to out, diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mvtop
