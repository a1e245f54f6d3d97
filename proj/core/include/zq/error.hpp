#pragma once

#include <stdexcept>
#include <string>

namespace zq {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element has positive p-adic valuation where a unit was required.
struct NotAUnit : Error {
    using Error::Error;
};

// Jacobi symbol requested for an even modulus.
struct EvenModulus : Error {
    using Error::Error;
};

// CRT split/join with non-coprime moduli.
struct NotCoprime : Error {
    using Error::Error;
};

// A dense or exhaustive computation exceeds the desk-scale caps.
struct CapacityExceeded : Error {
    using Error::Error;
};

// Arithmetic attempted between objects over different moduli or shapes.
struct ModulusMismatch : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

// Parameter outside its documented range.
struct InvalidRange : Error {
    using Error::Error;
};

} // namespace zq
