#pragma once

#include <cmath>
#include <span>

#include "symkernel/partition.hpp"
#include "symkernel/types.hpp"

namespace symkernel {

/// Rising factorial (lambda)_k = lambda (lambda+1) ... (lambda+k-1),
/// with (lambda)_0 = 1. Requires lambda > 0.
inline double pochhammer(double lambda, int k) {
    if (!(lambda > 0.0))
        throw invalid_weight_error("pochhammer: lambda must be > 0");
    if (k < 0) throw invalid_input_error("pochhammer: k must be >= 0");
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= lambda + i;
    return r;
}

/// (lambda)_k / k! accumulated as a product of per-step ratios
/// (lambda+i)/(i+1); never forms the two big products separately, so it
/// stays in range at degrees ~50 and beyond.
inline double pochhammer_over_factorial(double lambda, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (lambda + i) / (i + 1);
    return r;
}

inline double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Squared normalizer c_p^2 = (lambda)_p / (n! p!) of the anti-symmetric
/// basis vector a_p on D^n.
inline double basis_norm_constant_sq(const StrictPartition& p, const Weight& w) {
    double r = 1.0;
    for (int j = 0; j < p.length(); ++j)
        r *= pochhammer_over_factorial(w.lambda(), p[j]);
    return r / factorial(p.length());
}

/// c_p = sqrt((lambda)_p / (n! p!)); e_p = c_p a_p has unit norm.
inline double basis_norm_constant(const StrictPartition& p, const Weight& w) {
    return std::sqrt(basis_norm_constant_sq(p, w));
}

/// ||a_p|| = sqrt(n! p! / (lambda)_p) = 1 / c_p.
inline double antisym_basis_norm(const StrictPartition& p, const Weight& w) {
    return 1.0 / basis_norm_constant(p, w);
}

} // namespace symkernel
