#pragma once

#include <stdexcept>
#include <string>

namespace groverian {

// Argument outside the operation's domain (bad qubit count, index, party count...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Amplitudes that should be unit-norm are not.
class NormalizationError : public DomainError {
public:
    using DomainError::DomainError;
};

// An operation refused to run because it would exceed a resource budget.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, unsigned long long required)
        : std::runtime_error(what), required_(required) {}

    unsigned long long required() const noexcept { return required_; }

private:
    unsigned long long required_;
};

// Malformed state file or partition string. Line/column are 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace groverian
