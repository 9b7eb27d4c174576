#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixsym::cli {

enum ExitCode : int {
    kOk = 0,
    kIdentityFails = 1,
    kInvalidInput = 2,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixsym::cli
