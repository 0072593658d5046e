#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ordext::cli {

enum ExitCode : int {
    kSuccess = 0,
    kDomainError = 1,
    kUsageError = 2,
};

/// Process environment consulted by `run`.
struct Environment {
    /// ORDEXT_ENUM_LIMIT
    std::optional<std::string> enum_limit;

    static Environment from_process();
};

/// Runs one command. `args` excludes the program name. The path `-` reads
/// from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Environment& env = {});

} // namespace ordext::cli
