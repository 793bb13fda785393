#pragma once

#include <ostream>

namespace fsplit {

enum exit_code : int { exit_ok = 0, exit_usage = 2, exit_resource = 3, exit_not_f_pure = 4 };

// Parses argv, runs one command and writes the text report to `out`
// (and the JSON report to --json when given). Diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fsplit
