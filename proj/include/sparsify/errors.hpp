#pragma once

#include <stdexcept>
#include <string>

namespace sparsify {

/// Malformed or out-of-range input (bad vertex index, unreadable file).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text-format error; carries the 1-based line number it was raised on.
class ParseError : public InputError {
public:
    ParseError(int line, const std::string &what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An operation's precondition does not hold for its arguments.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A produced certificate failed independent re-verification. This is an
/// internal soundness alarm, never an expected outcome.
class CertificateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sparsify
