#pragma once

#include <stdexcept>
#include <string>

namespace ginspace {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in rings with different variable counts, or a width mismatch.
struct DimensionError : Error {
    using Error::Error;
};

/// A degree precondition fails (e.g. colon by a monomial of too-high degree).
struct DegreeError : Error {
    using Error::Error;
};

/// An operation that needs a nonzero input got the zero polynomial/space.
struct EmptyInputError : Error {
    using Error::Error;
};

/// A coordinate change is singular.
struct InvalidChangeError : Error {
    using Error::Error;
};

/// Division by the zero polynomial or zero scalar.
struct DivisionByZeroError : Error {
    using Error::Error;
};

/// Variable indices out of range or overlapping blocks.
struct IndexError : Error {
    using Error::Error;
};

/// A stated precondition does not hold (e.g. a non-stable monomial space
/// fed to a construction that requires strong stability).
struct PreconditionError : Error {
    using Error::Error;
};

/// Degreewise input does not form an ideal.
struct ConsistencyError : Error {
    using Error::Error;
};

/// Random sampling failed to produce a usable object within its attempt bound.
struct RandomnessError : Error {
    using Error::Error;
};

/// A size/degree cap was exceeded.
struct SizeError : Error {
    using Error::Error;
};

/// A rendering format is not available for the given input shape.
struct UnsupportedFormatError : Error {
    using Error::Error;
};

} // namespace ginspace
