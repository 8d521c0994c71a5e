#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace phigraph::cli {

enum ExitCode : int { ok = 0, usage = 1, counterexample = 2, guard = 3 };

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`; nothing is written to `out` unless the command
/// succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phigraph::cli
