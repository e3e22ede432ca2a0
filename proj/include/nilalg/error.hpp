#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilalg {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic that has no value in the field: division by zero, evaluation at a pole.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operand shapes that do not fit together.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          message_(message),
          line_(line),
          column_(column) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace nilalg
