#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rdpforge::cli {

// Runs one command line (without the program name). Reports go to --out or
// `out`; usage text and text-mode errors go to `err`. Returns the exit code:
// 0 pass, 1 fail, 2 inconclusive, 3 usage or capability error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rdpforge::cli
