#pragma once

#include <stdexcept>
#include <string>

namespace percbk {

// Bad user-supplied parameter (dimension, radius, probability range...).
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested object exceeds a configured size cap; the message names the limit.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold (e.g. the measure
// fails the FKG check, a function is not monotone).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Linear algebra breakdown: ill-conditioned Gram system, degenerate basis.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Conditioning on a zero-probability configuration.
struct conditioning_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace percbk
