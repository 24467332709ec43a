#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyplab::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int {
    kPass = 0,
    kCheckFailed = 1,
    kInvalidInput = 2,
    kNoConvergence = 3,
    kPrecondition = 4,
};

/// Runs one subcommand. args excludes the program name. Exactly one JSON
/// report envelope goes to `out` (or the --output file); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyplab::cli
