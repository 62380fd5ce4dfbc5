#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace singulex {

// Runs the CLI on the given argument list (program name excluded).
// Exit status: 0 success, 1 domain error, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace singulex
