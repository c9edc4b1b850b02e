#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace padiclat {

/// Runs one command line (without the program name).  Exit codes: 0 success,
/// 1 failed check, 2 input error, 3 precision exhausted.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace padiclat
