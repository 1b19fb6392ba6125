#pragma once

#include <ostream>

namespace diam_ramsey::cli {

enum ExitCode : int {
    kOk = 0,
    kContradiction = 1,  // formula contradicted or structural violation
    kUsage = 2,
    kInconclusive = 3,   // search reached its cap
};

/// Runs one command line (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diam_ramsey::cli
