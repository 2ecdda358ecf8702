#pragma once

#include <stdexcept>
#include <string>

namespace skewcodes {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated precondition, mismatched structures, out-of-domain input.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// An enumeration or search would exceed its configured budget.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// Malformed text input (field specs, polynomials, matrices, descriptors).
class ParseError : public DomainError {
public:
    explicit ParseError(const std::string& msg) : DomainError(msg) {}
};

// A received word whose error pattern is outside the decodable set.
class UncorrectableError : public DomainError {
public:
    explicit UncorrectableError(const std::string& msg) : DomainError(msg) {}
};

}  // namespace skewcodes
