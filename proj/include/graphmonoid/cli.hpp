#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphmonoid::cli {

// Runs one command (args excludes the program name). Exit codes: 0 computed,
// 2 invalid input or usage, 3 completion budget exhausted.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace graphmonoid::cli
