#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace talg {

/// Base class for all errors raised on bad inputs or violated preconditions.
/// Check *outcomes* (failed identities, counterexamples) are returned as
/// values, never thrown.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Scalar-literal or file syntax error; `position` is a byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class FieldMismatchError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero") {}
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace talg
