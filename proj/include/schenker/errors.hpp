#pragma once

#include <stdexcept>

namespace schenker {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A modular inverse was requested for an element not coprime to the modulus.
struct NonInvertible : Error {
    using Error::Error;
};

// An exact (non-modular) evaluation was refused because the index exceeds
// the configured size cap.
struct CapExceeded : Error {
    using Error::Error;
};

// An operation that requires p | n was called with p not dividing n.
struct NotMultiple : Error {
    using Error::Error;
};

// A lifting operation was called on an index that does not satisfy the
// divisibility requirements of its level.
struct PreconditionFailed : Error {
    using Error::Error;
};

} // namespace schenker
