#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kostant {

// args excludes the program name. Exit codes: 0 success, 1 domain error (including a diverged
// run), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kostant
