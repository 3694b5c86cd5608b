#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fimult {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands have incompatible shapes or sizes.
class DimensionError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// Malformed input to a constructor (not a permutation, not a partition, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A computation would exceed the configured resource cap.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// An exact computation produced a value that contradicts a mathematical
/// invariant (e.g. a non-integral multiplicity). Always a bug or bad input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Presentation-file syntax or semantic error, annotated with a 1-based
/// line and column.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace fimult
