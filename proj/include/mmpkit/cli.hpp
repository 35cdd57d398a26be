#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmpkit::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kValidation = 2,
    kPrecondition = 3,
};

/// Runs one invocation. `args` excludes the program name. Reports go to `out`;
/// text-mode diagnostics go to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mmpkit::cli
