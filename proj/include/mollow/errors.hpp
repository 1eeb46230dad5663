// errors.hpp - exception hierarchy shared by the mollow library and CLI
//
// The CLI maps these onto its exit-code contract:
//   ValidationError (and subclasses) -> 2, IoError -> 3, NumericalError -> 4.

#pragma once

#include <stdexcept>
#include <string>

namespace mollow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad inputs or configuration (detectable before any numerics run).
struct ValidationError : Error {
    using Error::Error;
};

// Omega = Delta = 0: no dressing exists, the mixing angle is undefined.
struct DegenerateDrive : ValidationError {
    DegenerateDrive() : ValidationError("degenerate drive: Omega = Delta = 0") {}
    explicit DegenerateDrive(const std::string& what) : ValidationError(what) {}
};

// Transition pair outside the implemented matrix-element table.
struct UnsupportedTransition : ValidationError {
    using ValidationError::ValidationError;
};

struct BadGrid : ValidationError {
    using ValidationError::ValidationError;
};

struct IoError : Error {
    using Error::Error;
};

// Hard numerical failure (as opposed to a fit that merely did not converge,
// which is reported through ThreeLorentzianFit::converged).
struct NumericalError : Error {
    using Error::Error;
};

struct NoPeaks : NumericalError {
    NoPeaks() : NumericalError("no local maxima found in samples") {}
};

struct DegenerateInit : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace mollow
