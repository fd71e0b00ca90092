#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyset {

/// Runs the command line front end. args excludes the program name.
/// Exit codes: 0 success, 1 domain error or negative verdict, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyset
