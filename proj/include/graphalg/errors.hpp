#pragma once

#include <stdexcept>
#include <string>

namespace graphalg {

// Source-position-carrying error for the graph DSL and element grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(size_t line, size_t column, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}

    size_t line() const { return line_; }
    size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    size_t line_, column_;
    std::string message_;
};

// Raised when an exact computation exceeds the supported desk-scale bounds
// (e.g. torsion automorphism enumeration on a group that is too large).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace graphalg
