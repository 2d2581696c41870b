#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ebi {

/// Runs the command line given as argv-style arguments (program name
/// excluded). Writes results to `out` and diagnostics to `err`.
/// Exit codes: 0 success/PASS, 1 verification FAIL or assertion breach,
/// 2 usage error, 3 enumeration budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ebi
