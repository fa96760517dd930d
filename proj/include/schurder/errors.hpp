#pragma once

#include <stdexcept>
#include <string>

namespace schurder {

/// Domain error carrying a stable code such as "invalid-params" or
/// "inconclusive". The CLI maps these to exit status 1.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Raised when a randomized or bounded search could not reach a verdict.
class Inconclusive : public Error {
public:
    explicit Inconclusive(const std::string& what) : Error("inconclusive", what) {}
};

}  // namespace schurder
