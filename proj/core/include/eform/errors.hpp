#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eform {

// Thrown when the source text of a polynomial or manifest cannot be read.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Variable sets, ranks, arities or index ranges that do not fit together.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An input violates a mathematical precondition (closedness, degree, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace eform
