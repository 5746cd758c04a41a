#pragma once

#include <stdexcept>
#include <string>

namespace vinbergkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Zero divisors, degree caps, unsupported field degrees.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// Malformed input text; carries a 1-based position when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, int line = 0, int column = 0)
        : Error(line ? "line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what
                     : what),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_ = 0;
    int column_ = 0;
};

/// Well-formed input that violates a mathematical precondition
/// (signature, rank, weight bounds).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed; indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace vinbergkit
