#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hhv {

// Runs the command-line front end on args (program name excluded), writing
// reports to out and diagnostics to err. Returns the process exit code:
// 0 ok, 1 an asserted inequality was violated, 2 bad configuration or input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hhv
