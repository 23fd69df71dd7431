#pragma once

#include <ostream>

namespace scd {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `scd` tool. Subcommands: score, rank, classify, tune,
// evaluate, dump-distributions, validate.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scd
