#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qrr/report.hpp"

namespace qrr {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs one command. args excludes the program name. Results go to out,
/// diagnostics to err.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// The invariant suite behind `selftest`, at fixed desk-scale sizes.
std::vector<VerificationReport> run_selftest();

}  // namespace qrr
