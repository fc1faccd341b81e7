#ifndef RELCLASS_ERRORS_HPP
#define RELCLASS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relclass {

// Base of everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller-facing errors: bad arguments, missing fields, unusable input.
// The CLI maps these to exit code 2.
struct DomainError : Error {
    using Error::Error;
};

// Exactness or identity failures inside the computation. Any of these
// means either an arithmetic bug or a falsified identity; the CLI maps
// them to exit code 1.
struct IntegrityError : Error {
    using Error::Error;
};

struct NonUnit : DomainError {
    using DomainError::DomainError;
};

struct DegreeMismatch : DomainError {
    using DomainError::DomainError;
};

struct InvalidAutomorphism : DomainError {
    using DomainError::DomainError;
};

struct MalformedInput : DomainError {
    using DomainError::DomainError;
};

struct NoSuchField : DomainError {
    using DomainError::DomainError;
};

struct InvalidPrime : DomainError {
    using DomainError::DomainError;
};

struct UnknownFormat : DomainError {
    using DomainError::DomainError;
};

struct FactorizationIncomplete : DomainError {
    using DomainError::DomainError;
};

struct CacheCorrupt : DomainError {
    using DomainError::DomainError;
};

// Integer division that had to be exact was not. Carries the coefficient
// index at which exactness failed.
struct NotDivisible : IntegrityError {
    std::size_t index;
    NotDivisible(const std::string& msg, std::size_t idx)
        : IntegrityError(msg), index(idx) {}
};

struct InternalInconsistency : IntegrityError {
    using IntegrityError::IntegrityError;
};

struct NonIntegralResult : IntegrityError {
    using IntegrityError::IntegrityError;
};

struct ZeroLValue : IntegrityError {
    using IntegrityError::IntegrityError;
};

} // namespace relclass

#endif
