#pragma once

#include <stdexcept>
#include <string>

namespace lielimits {

// Base of every error the library throws. The CLI maps the concrete type to
// an exit code (see exit_code()).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input is well-formed but mathematically outside the operation's domain
// (non-dominant weight, rank below the floor, multi-factor source, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Vector/weight lengths do not match the algebra.
class DimensionError : public DomainError {
public:
    using DomainError::DomainError;
};

// Structurally valid data that violates a contract of the data model
// (branching of the wrong dimension, non-self-dual orthogonal branching, ...).
class SpecError : public DomainError {
public:
    using DomainError::DomainError;
};

// Bratteli labels or branchings contradict each other.
class InconsistentSystem : public DomainError {
public:
    using DomainError::DomainError;
};

// A configured resource bound (dimension, enumeration size) was exceeded.
class ResourceError : public DomainError {
public:
    using DomainError::DomainError;
};

// The finite prefix does not carry enough levels to decide a question.
class InsufficientPrefix : public Error {
public:
    using Error::Error;
};

// Text or JSON could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

// A mathematical identity the code relies on failed. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

inline int exit_code(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 2;
    if (dynamic_cast<const InsufficientPrefix*>(&e)) return 3;
    return 1;
}

}  // namespace lielimits
