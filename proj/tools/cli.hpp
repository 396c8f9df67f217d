#pragma once

#include <ostream>

namespace roughlub::cli {

enum ExitCode : int {
    kSuccess = 0,
    kNumericalFailure = 1,
    kInputError = 2,
};

/// Entry point of the `roughlub` command line tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace roughlub::cli
