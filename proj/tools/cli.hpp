#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rigidwitt::cli {

enum ExitCode : int {
    ok = 0,
    usage = 1,
    parse = 2,
    precondition = 3,
    depth_cap = 4,
    suite_failure = 5,
    internal = 6,
};

/// Runs one command line (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigidwitt::cli
