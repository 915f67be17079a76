#ifndef RANKBARRIERS_ERRORS_HPP
#define RANKBARRIERS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rankbarriers {

// Base class for all library errors caused by bad inputs or unsupported
// requests.  Anything else escaping the library is a genuine bug.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Dimension / index mismatches.
struct ShapeError : Error {
    using Error::Error;
};

// Operation requested over a scalar kind that does not support it
// (e.g. elimination over a non-field ring).
struct UnsupportedScalarError : Error {
    using Error::Error;
};

// Field characteristic too small for the requested identity.
struct CharacteristicError : Error {
    using Error::Error;
};

// Value-level violations: mixed moduli, mismatched series centers,
// out-of-range parameters.
struct DomainError : Error {
    using Error::Error;
};

// Tensor expected to be symmetric is not.
struct SymmetryError : Error {
    using Error::Error;
};

// Lifting seed does not satisfy the equation at the center.
struct BadSeedError : Error {
    using Error::Error;
};

// Lifting seed is a critical point: the linearization is singular.
struct NonEtaleError : Error {
    using Error::Error;
};

// Search or enumeration would exceed the configured cap.
struct SizeError : Error {
    using Error::Error;
};

// No rank oracle is available for the requested target space.
struct OracleUnavailableError : Error {
    using Error::Error;
};

// Method sends every simple to zero; potency is undefined.
struct DegenerateMethodError : Error {
    using Error::Error;
};

// Malformed external input (JSON, CLI arguments).
struct ValidationError : Error {
    using Error::Error;
};

} // namespace rankbarriers

#endif
