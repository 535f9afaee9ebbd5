#pragma once

#include <stdexcept>
#include <string>

namespace medina {

/// Malformed textual input (rationals, polynomial JSON).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside an operation's domain (m < 1, eps <= 0, even Taylor degree, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Division by the zero polynomial or by a zero rational.
class DivisionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A computation hit its configured work or iteration ceiling.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal algebraic invariant failed; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace medina
