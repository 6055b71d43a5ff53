#pragma once

#include <stdexcept>
#include <string>

namespace epband {

// Base for all library-thrown runtime errors so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Biorthogonal frame degenerates (self-orthogonality at/near an exceptional point).
struct CoalescentError : Error {
    using Error::Error;
};

// Parameter line where the generic EP solver does not apply (|1-delta^2| ~ 0 etc).
struct DegenerateParamsError : Error {
    using Error::Error;
};

// A winding loop passed through (or too close to) a field zero.
struct LoopThroughEPError : Error {
    using Error::Error;
};

// Accumulated winding failed to land on a half-integer.
struct NonQuantizedError : Error {
    using Error::Error;
};

// Dense matrix exceeds the desk-scale guard.
struct SizeGuardError : Error {
    using Error::Error;
};

// Dense eigensolver did not converge; message carries the matrix hash.
struct EigenConvergenceError : Error {
    using Error::Error;
};

// An internal consistency assertion failed (library bug or unreachable input).
struct InternalCheckError : Error {
    using Error::Error;
};

} // namespace epband
