#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace milnor::cli {

// Runs the command line given argv-style arguments (program name excluded).
// Results go to `out`, diagnostics to `err`.
//
// Exit codes: 0 success; 1 negative mathematical verdict (not isolated,
// series not a polynomial, inference failure, corpus mismatch); 2 usage or
// parse error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace milnor::cli
