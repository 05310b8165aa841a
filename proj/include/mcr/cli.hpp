#ifndef MCR_CLI_HPP
#define MCR_CLI_HPP

#include <ostream>

namespace mcr {

// Exit codes of the `mcr` command.
enum ExitCode : int {
  kExitOk = 0,
  kExitNoSolution = 1,   // nothing within --alpha, or goal unreachable
  kExitBadInput = 2,     // bad flags, unreadable or invalid input file
  kExitInternal = 3,
};

// Entry point behind the `mcr` binary. Payload goes to `out`, diagnostics
// to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace mcr

#endif  // MCR_CLI_HPP
