#pragma once

#include <stdexcept>
#include <string>

namespace qgi {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operand shapes are incompatible (product, power of a non-square, ...).
struct dimension_mismatch : error {
    using error::error;
};

// A 1-based row/column/index-set entry is outside the valid range.
struct index_out_of_range : error {
    using error::error;
};

// A square dimension exceeds the configured cap for permutation-expansion
// determinants (cost grows as n!).
struct dimension_cap_exceeded : error {
    using error::error;
};

struct not_hermitian : error {
    using error::error;
};

struct zero_divisor : error {
    using error::error;
};

// Matrix index precondition violated (e.g. core inverse of Ind A >= 2).
struct index_mismatch : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

struct unknown_system : error {
    using error::error;
};

// An oracle self-check failed: the independently computed ground truth does
// not satisfy its own defining equations. Always a bug, never user error.
struct oracle_failure : error {
    using error::error;
};

// Internal invariant broken (zero determinantal denominator under a claimed
// rank precondition, non-real Hermitian determinant, ...).
struct internal_error : error {
    using error::error;
};

} // namespace qgi
