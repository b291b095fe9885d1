#pragma once

#include <stdexcept>
#include <string>

namespace freespec {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A measure whose total mass is not 1, or with malformed grid/atoms.
class InvalidMeasure : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a transform.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation point hits a pole of an integrand.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// An operation's stated precondition does not hold (nonzero trace, non-normal input, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The radial-law inversion was handed a point mass.
class DiracInputError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Exponential-cost recursion would exceed its length bound.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// File or stream failure.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace freespec
