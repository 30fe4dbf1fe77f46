#pragma once

#include <stdexcept>
#include <string>

namespace symkernel {

/// Base class for all errors thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dimension argument n < 1, or mismatched vector lengths.
struct invalid_dimension_error : error {
    using error::error;
};

/// Weight parameter outside the supported family (lambda < 1, or
/// lambda <= 0 for the Pochhammer symbol).
struct invalid_weight_error : error {
    using error::error;
};

/// Point lies outside the open unit polydisc (or outside G_n).
struct domain_error : error {
    using error::error;
};

/// Coordinates too close to the diagonal for a quotient/determinant
/// evaluation; callers should switch to the series route.
struct degenerate_point_error : error {
    using error::error;
};

/// Series cannot converge for the given arguments.
struct no_convergence_error : error {
    using error::error;
};

/// Structurally invalid input (duplicate labels, empty sample set, ...).
struct invalid_input_error : error {
    using error::error;
};

/// Denominator of a closed-form expression vanished.
struct singular_evaluation_error : error {
    using error::error;
};

} // namespace symkernel
