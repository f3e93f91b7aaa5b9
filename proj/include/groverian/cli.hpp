#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace groverian::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kBudgetRefused = 3,
    kNotConverged = 4,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace groverian::cli
