#pragma once

#include <ostream>

namespace ibc::reports {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitInvalidArguments = 2,
  kExitResourceGuard = 3,
  kExitAcceptanceFailure = 4,
};

/// Entry point of the `ibc` tool. Subcommands: eigs, oracle-eigs, complexity,
/// classify, density, verify-thm1, reproduce. Results go to --out (or `out`
/// when absent); diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ibc::reports
