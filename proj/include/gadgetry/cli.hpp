#pragma once

#include <ostream>

namespace gadgetry {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;     // a verification ran and failed
inline constexpr int kExitUsage = 2;    // bad flags, unreadable or invalid input
inline constexpr int kExitTimeout = 3;  // budget exhausted, or no realizer available

/// Runs one command line (argv[0] is the program name). Normal output goes to
/// `out`, diagnostics to `err`. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gadgetry
