#pragma once

#include <stdexcept>
#include <string>

namespace fibredim {

/// Input could not be parsed. `line`/`column` are 1-based; for errors inside
/// a relation expression the column refers to the position in that expression.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column)
        : std::runtime_error(std::move(message)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Well-formed input that violates an invariant (base mismatch, non-prime
/// modulus, incompatible point, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& message) : std::runtime_error(message) {}
};

/// Operands live in different coefficient domains.
class DomainMismatchError : public ValidationError {
public:
    explicit DomainMismatchError(const std::string& message) : ValidationError(message) {}
};

/// The requested computation is outside the engine's supported configurations;
/// the message names the missing hypothesis.
class UnsupportedConfigError : public std::runtime_error {
public:
    explicit UnsupportedConfigError(const std::string& message) : std::runtime_error(message) {}
};

/// A caller-supplied prime witness or component list is inconsistent with the
/// fibre it refers to.
class InconsistentWitnessError : public std::runtime_error {
public:
    explicit InconsistentWitnessError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace fibredim
