#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace germlab {

/// All failures surface as Error with a stable machine-readable code
/// (e.g. "algebra.NotDivisible", "germ.ParseError") plus a human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

inline void require(bool cond, std::string_view code, const std::string& message) {
    if (!cond) fail(std::string(code), message);
}

}  // namespace germlab
