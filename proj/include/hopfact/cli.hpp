#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfact {

/// Runs one subcommand (verify, enumerate, act, factor-check, oracle).
/// args excludes the program name. JSON goes to out, diagnostics to err.
/// Returns 0 on success, 1 when a check fails, 2 on usage or input errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfact
