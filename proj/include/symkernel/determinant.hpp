#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "symkernel/types.hpp"

namespace symkernel {

/// Determinant of a dense complex n x n matrix (row-major, overwritten)
/// by LU factorization with partial pivoting. A vanishing pivot short-
/// circuits to an exact zero; matrices with two equal rows hit that path
/// exactly (their elimination factor is exactly 1).
inline Cplx lu_determinant_inplace(std::span<Cplx> a, int n) {
    Cplx det(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(a[static_cast<std::size_t>(k * n + k)]);
        for (int r = k + 1; r < n; ++r) {
            const double m = std::abs(a[static_cast<std::size_t>(r * n + k)]);
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (best == 0.0) return Cplx(0.0, 0.0);
        if (piv != k) {
            for (int c = 0; c < n; ++c)
                std::swap(a[static_cast<std::size_t>(k * n + c)],
                          a[static_cast<std::size_t>(piv * n + c)]);
            det = -det;
        }
        const Cplx pivot = a[static_cast<std::size_t>(k * n + k)];
        det *= pivot;
        for (int r = k + 1; r < n; ++r) {
            const Cplx factor = a[static_cast<std::size_t>(r * n + k)] / pivot;
            if (factor == Cplx(0.0, 0.0)) continue;
            for (int c = k + 1; c < n; ++c)
                a[static_cast<std::size_t>(r * n + c)] -=
                    factor * a[static_cast<std::size_t>(k * n + c)];
        }
    }
    return det;
}

inline Cplx lu_determinant(std::vector<Cplx> a, int n) {
    return lu_determinant_inplace(a, n);
}

} // namespace symkernel
