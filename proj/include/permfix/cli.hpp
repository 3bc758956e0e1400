#pragma once

#include <iosfwd>

namespace permfix {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitValidation = 2,
  kExitGateFailure = 3,
  kExitCrossCheck = 4,
};

// Entry point behind the `permfix` binary: reports go to `out`,
// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permfix
