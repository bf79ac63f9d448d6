#pragma once

#include <stdexcept>
#include <string>

namespace bk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape or size problems: non-square input, incompatible product, bad arity.
struct DimensionError : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

// Unknown family / gate / law / suite / pairing. The CLI maps these to exit 2.
struct UnknownId : Error {
    using Error::Error;
};

// Parameters violate a family's printed constraints. CLI exit 3.
struct ConstraintViolation : Error {
    using Error::Error;
};

// Enumeration or operator size above the configured cap. CLI exit 4.
struct CapExceeded : Error {
    using Error::Error;
};

}  // namespace bk
