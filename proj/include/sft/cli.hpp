#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sft {

// One command-line invocation, in-process; `args` excludes the program
// name. Exit codes: 0 for success (including NONEMPTY and EMPTY verdicts),
// 2 for UNKNOWN, 1 for any error. The environment variable SFT_MAX_CELLS
// overrides the torus/window enumeration cell cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sft
