#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dixkit::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kDataError = 2,
    kNumericError = 3,
};

/// Entry point shared by the executable and the tests. Subcommands:
/// split, augment, ensemble, evaluate, train-toy, make-toy.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace dixkit::cli
