#ifndef SYMCUT_TOOLS_APP_HPP
#define SYMCUT_TOOLS_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace symcut::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kResourceCap = 3 };

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symcut::cli

#endif  // SYMCUT_TOOLS_APP_HPP
