#pragma once

#include <stdexcept>
#include <string>

namespace lambda3 {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A physical parameter is outside its admissible domain (e.g. t1 <= 0).
struct InvalidParameterError : Error {
    using Error::Error;
};

// A density-matrix state fails its structural requirements
// (hermiticity, real unit-sum populations, ...).
struct InvalidStateError : Error {
    using Error::Error;
};

// Config-file problem: unreadable file, bad syntax, unknown key, or a value
// that fails domain validation. Messages carry file:line where applicable.
struct ConfigError : Error {
    using Error::Error;
};

// Fixed-step integration lost the conservation law beyond budget; the step
// size is too large for the requested parameters.
struct StepSizeError : Error {
    using Error::Error;
};

// The eigenvector matrix of the generator is too close to singular for a
// reliable mode expansion (near-degenerate eigenvalues).
struct IllConditionedError : Error {
    using Error::Error;
};

// A root-bracketing interval does not straddle the sought sign change.
struct BracketError : Error {
    using Error::Error;
};

// An internal numerical identity failed (lost zero mode, residual imaginary
// parts, ...). Indicates inputs far outside the intended regime.
struct NumericalError : Error {
    using Error::Error;
};

// A decay-constant fit cannot be formed: residuals below the significance
// floor, inconsistent signs, or no decay between the two fit times.
struct InsufficientSignalError : Error {
    using Error::Error;
};

}  // namespace lambda3
