#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace zarchow {

// Failure of a mathematical precondition or certification, as opposed to a
// programming error. Carries a stable machine-readable code; the CLI maps
// these to exit code 2.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    explicit DomainError(std::string code)
        : std::runtime_error(code), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace zarchow
