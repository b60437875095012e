#pragma once

#include <stdexcept>
#include <string>

namespace ncsheaf {

/// Base of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Domain-level failures (invalid inputs, violated preconditions). CLI exit code 1.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed documents or flag values. CLI exit code 2.
class ParseError : public Error {
public:
    using Error::Error;
};

class FieldMismatchError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A level sequence violating the shift condition; `level` is the first bad index q
/// (the inclusion of level q+1 in level q and its unit shift fails).
class InvalidOmegaError : public DomainError {
public:
    InvalidOmegaError(int level, const std::string& what)
        : DomainError(what), level(level) {}
    int level;
};

class NotASubsetError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Two cover members carrying different polynomials on an overlap.
class IncompatibleSectionsError : public DomainError {
public:
    IncompatibleSectionsError(int member_a, int member_b, int level, int component,
                              const std::string& what)
        : DomainError(what), member_a(member_a), member_b(member_b), level(level),
          component(component) {}
    int member_a;
    int member_b;
    int level;
    int component;
};

class OutOfDomainError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedOpError : public DomainError {
public:
    using DomainError::DomainError;
};

class PreconditionError : public DomainError {
public:
    using DomainError::DomainError;
};

class ValueRangeError : public DomainError {
public:
    using DomainError::DomainError;
};

class DegreeError : public DomainError {
public:
    using DomainError::DomainError;
};

class EmptySetError : public DomainError {
public:
    using DomainError::DomainError;
};

class InsufficientSamplesError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace ncsheaf
