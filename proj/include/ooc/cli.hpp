#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace ooc {

// Entry point of the ooc2d command line tool. `args` excludes the program
// name. Returns the process exit code: 0 success, 1 usage or parameter
// errors, 2 I/O failures.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ooc
