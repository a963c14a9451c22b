#pragma once

#include <stdexcept>
#include <string>

namespace chainloops {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's domain (bad parameters, malformed
/// divisor, wrong basepoint, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The operation needs a generic chain and the given one is not generic.
class NonGenericError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A configured work budget was exhausted before the computation finished.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// Malformed input text or JSON document.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed. Indicates a bug, not a usage error.
class InvariantError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
    if (!condition)
        throw DomainError(message);
}

inline void internal_check(bool condition, const std::string& message) {
    if (!condition)
        throw InvariantError(message);
}

} // namespace detail

} // namespace chainloops
