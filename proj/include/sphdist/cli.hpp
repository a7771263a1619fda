#pragma once

#include <ostream>

#include "sphdist/voronoi.hpp"

namespace sphdist {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitIo = 1, kExitInvalid = 2 };

// Entry point of the `sphdist` tool. Output goes to `out` unless --out names a
// file; diagnostics and errors go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sphdist
