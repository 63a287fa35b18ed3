#pragma once

#include <stdexcept>
#include <string>

namespace dimwall {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands live on different discrete spaces.
struct SpaceMismatchError : Error {
    using Error::Error;
};

// A family member violates the unit-norm admission requirement.
struct UnitNormError : Error {
    using Error::Error;
};

// A computed quantity is inconsistent beyond roundoff, e.g. a projection
// residual more negative than the clamping tolerance.
struct NumericalConsistencyError : Error {
    using Error::Error;
};

// The proven dimension inequality failed outside tolerance. This signals an
// implementation bug, never a mathematical event.
struct BoundViolationError : Error {
    using Error::Error;
};

// A request exceeds a hard resource cap (names the memory cost).
struct CapacityError : Error {
    using Error::Error;
};

// An argument is outside the operation's domain.
struct DomainError : Error {
    using Error::Error;
};

// A Monte Carlo trial failed; message carries the trial index and seed.
struct TrialError : Error {
    using Error::Error;
};

// Experiment configuration is invalid (unknown key, missing seed, ...).
struct ConfigError : Error {
    using Error::Error;
};

} // namespace dimwall
