#ifndef MOLGATE_ERRORS_HPP
#define MOLGATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace molgate {

// Base for all domain errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configuration / input validation problems (CLI exit code 1).
struct ConfigError : Error {
    using Error::Error;
};

// Physics problems: zero interaction rate, invalid geometry, etc.
// (CLI exit code 2).
struct PhysicsError : Error {
    using Error::Error;
};

struct ZeroRate : PhysicsError {
    using PhysicsError::PhysicsError;
};

struct UnknownLabel : Error {
    using Error::Error;
};

struct BasisMismatch : Error {
    using Error::Error;
};

struct ZeroVector : Error {
    using Error::Error;
};

struct InvalidTime : Error {
    using Error::Error;
};

struct NonFiniteAmplitude : Error {
    using Error::Error;
};

struct EmptyTrajectory : Error {
    using Error::Error;
};

struct RestrictionViolation : PhysicsError {
    using PhysicsError::PhysicsError;
};

struct InvalidSigma : Error {
    using Error::Error;
};

// A basis state did not return to itself with enough amplitude to
// define a gate phase (CLI exit code 3).
struct DegenerateGate : Error {
    using Error::Error;
};

}  // namespace molgate

#endif
