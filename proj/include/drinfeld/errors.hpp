#pragma once

#include <stdexcept>
#include <string>

namespace drinfeld {

// Error taxonomy used across the library. Every throw site attaches a stable
// machine-readable code ("NotDominant", "RankMismatch", ...) so that callers
// (in particular the CLI) can map failures without parsing messages.

class error : public std::runtime_error {
public:
    error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Invalid input: bad parameters, violated preconditions.
class domain_error : public error {
public:
    using error::error;
};

// A mathematical identity that must hold by theorem failed on concrete data;
// always indicates an implementation bug, never bad input.
class theorem_violation : public error {
public:
    using error::error;
};

inline void require(bool cond, const char* code, const std::string& what) {
    if (!cond) throw domain_error(code, what);
}

inline void check_theorem(bool cond, const char* code, const std::string& what) {
    if (!cond) throw theorem_violation(code, what);
}

} // namespace drinfeld
