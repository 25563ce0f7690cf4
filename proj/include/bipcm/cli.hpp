#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bipcm {

// Exit codes are a stable contract:
//   0 pass, 1 verdict false, 2 input error, 3 audit precondition, 4 budget.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bipcm
