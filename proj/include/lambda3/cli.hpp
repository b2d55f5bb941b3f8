#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lambda3 {

// Entry point of the command-line tool, callable in-process for testing.
// argv excludes the program name. Returns 0 on success, 1 on domain or
// runtime errors, 2 on usage/parse errors. All output goes to the given
// streams; given the same inputs the bytes written are identical run to run.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lambda3
