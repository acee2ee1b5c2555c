#pragma once

#include <stdexcept>
#include <string>

namespace zzmod {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input dimensions do not match (bad edge shape, wrong-length vector, ...).
struct DimensionError : Error {
    using Error::Error;
};

/// split_surjection called on a map that is not surjective over Z.
struct NotSurjectiveError : Error {
    using Error::Error;
};

/// complement called on a submodule whose quotient has torsion.
struct NotFreeQuotientError : Error {
    using Error::Error;
};

/// path_map requested between incomparable vertices.
struct NotComparableError : Error {
    using Error::Error;
};

/// direct_sum of modules over different shapes.
struct ShapeMismatchError : Error {
    using Error::Error;
};

/// An operation's stated precondition does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

/// A splitting required by the decomposition failed; the module cannot
/// satisfy the projective colimit conditions.
struct PccViolationError : Error {
    using Error::Error;
};

/// Internal consistency check failed.  This is a bug sentinel: it must
/// never fire on any input, and the CLI maps it to exit code 3.
struct InternalCheckError : Error {
    using Error::Error;
};

} // namespace zzmod
