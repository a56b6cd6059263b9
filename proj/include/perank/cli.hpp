#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perank {

/// Parses and executes one CLI invocation. args excludes the program
/// name. Exit codes: 0 success, 2 input error, 3 unsupported operation
/// (non-coprime closed forms), 4 resource budget or arithmetic range.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace perank
