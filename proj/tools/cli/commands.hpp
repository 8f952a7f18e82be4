#ifndef HHBOUNDS_CLI_COMMANDS_HPP
#define HHBOUNDS_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hhb::cli {

enum ExitStatus : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

/// Gate applied by the identity subcommand to |lhs - rhs|.
inline constexpr double kIdentityGate = 1e-8;
/// Gate applied to |value - oracle| beyond the certified error bound.
inline constexpr double kCertificationSlack = 1e-12;
/// Agreement required by reduce-check.
inline constexpr double kReductionTolerance = 1e-10;

/// Runs one subcommand. args excludes the program name. Reports go to out
/// (or to --output), diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hhb::cli

#endif  // HHBOUNDS_CLI_COMMANDS_HPP
