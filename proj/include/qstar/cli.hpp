#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qstar/twist.hpp"

namespace qstar {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitUnsupported = 3 };

/// "one" (eta = 1) or "perturbed" (eta(1, 1/2, 3/2) = 1 + hbar, else 1).
EtaFunction eta_by_name(std::string_view name);

/// Runs the tool; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qstar
