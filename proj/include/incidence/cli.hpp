#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace incidence::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    // A proven statement failed on concrete input: an implementation bug.
    kProvenCheckFailed = 2,
};

/// Runs the incidence-lab command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace incidence::cli
