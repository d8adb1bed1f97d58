#pragma once

#include <stdexcept>
#include <string>

namespace tubal {

/// Shape or mode-index mismatch between operands.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two tubal objects carry different transforms; mixing is never coerced.
struct transform_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operation requires a scaled-unitary transform (L = cW) but got a general one.
struct unsupported_transform : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Transform matrix rejected at construction (singular or ill-conditioned).
struct invalid_transform : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A result expected to be real carried a non-negligible imaginary part,
/// or an input contained non-finite values.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tubal
