#pragma once

#include <stdexcept>
#include <string>

namespace merocoef {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input: unknown target, malformed parameters, invalid Bezout pair.
struct InvalidArgument : Error {
    using Error::Error;
};

// The computation is refused: point too close to a pole or elliptic point,
// parameters outside the convergence region.
struct DomainError : Error {
    using Error::Error;
};

// Truncation order or stored constant precision is not enough for the request.
struct PrecisionError : Error {
    using Error::Error;
};

}  // namespace merocoef
