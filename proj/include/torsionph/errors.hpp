#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torsionph {

/// Filtration violates prefix closure, dimension or facet rules.
class StructureError : public std::runtime_error {
public:
    StructureError(std::size_t cell, const std::string& what)
        : std::runtime_error("cell " + std::to_string(cell) + ": " + what), cell_(cell) {}

    std::size_t cell() const noexcept { return cell_; }

private:
    std::size_t cell_;
};

/// Malformed text input; line numbers are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Arithmetic outside the domain: inverting zero, composite modulus.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Division by a non-unit in the integer ring.
class UnitError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Caller passed arguments that violate a precondition.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A hypothesis required by the requested computation does not hold.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace torsionph
