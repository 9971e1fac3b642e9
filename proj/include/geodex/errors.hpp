#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace geodex {

// Bad input from the caller: invalid vertex ids, parameters outside a
// family's domain, preconditions of a transform that do not hold.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DisconnectedError : public InputError {
public:
    using InputError::InputError;
};

// Refusal to run an exponential routine above its supported size.
class SizeGuardError : public InputError {
public:
    using InputError::InputError;
};

class PreconditionError : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : InputError(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// An internal cross-check failed: a closed form disagreed with a direct
// count, a division that must be exact left a remainder, an invariant broke.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace geodex
