#pragma once

#include <string>
#include <vector>

namespace zarchow {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// The whole command-line surface, testable in-process. Exit codes: 0 on
/// success, 1 on usage errors, 2 on domain errors.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace zarchow
