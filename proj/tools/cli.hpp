#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mprisk::cli {

// Runs the command line `args` (without the program name). Returns the process
// exit code: 0 ok, 1 validation, 2 numerical, 3 I/O.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mprisk::cli
