#pragma once

// Brute-force reference implementations used only by the tests. Each one
// is deliberately independent of the library code path it checks:
// anti-symmetrization by explicit permutation sums, symmetric functions
// by exhaustive monomial enumeration, integrals by composite Simpson.

#include <algorithm>
#include <complex>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "symkernel/types.hpp"

namespace oracle {

using symkernel::Cplx;
using symkernel::CVec;

inline Cplx monomial_value(std::span<const int> e, std::span<const Cplx> z) {
    Cplx v(1.0, 0.0);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) v *= z[i];
    return v;
}

inline int perm_sign(std::span<const int> perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

/// a_p(z) = sum_sigma sgn(sigma) z^{p_sigma} by explicit enumeration.
inline Cplx antisymmetrize_brute(std::span<const int> p, std::span<const Cplx> z) {
    const int n = static_cast<int>(p.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Cplx acc(0.0, 0.0);
    do {
        std::vector<int> pe(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            pe[static_cast<std::size_t>(i)] =
                p[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        acc += static_cast<double>(perm_sign(perm)) * monomial_value(pe, z);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

/// h_k(z) as the sum over all degree-k monomials in n variables.
inline Cplx complete_homogeneous_brute(int k, std::span<const Cplx> z) {
    if (k < 0) return Cplx(0.0, 0.0);
    const int n = static_cast<int>(z.size());
    Cplx acc(0.0, 0.0);
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    const std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == n - 1) {
            e[static_cast<std::size_t>(pos)] = remaining;
            acc += monomial_value(e, z);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            e[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
    };
    rec(0, k);
    return acc;
}

/// Schur value as the bialternant quotient of two brute-force
/// anti-symmetrizations (valid away from the diagonal).
inline Cplx schur_brute(std::span<const int> m, std::span<const Cplx> z) {
    const int n = static_cast<int>(m.size());
    std::vector<int> p(m.begin(), m.end()), d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        p[static_cast<std::size_t>(i)] += n - 1 - i;
        d[static_cast<std::size_t>(i)] = n - 1 - i;
    }
    return antisymmetrize_brute(p, z) / antisymmetrize_brute(d, z);
}

/// Every weakly decreasing n-tuple with sum <= max_weight, obtained by
/// filtering the full product set; sorted graded-lexicographically.
inline std::vector<std::vector<int>> enumerate_partitions_brute(int n, int max_weight) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(static_cast<std::size_t>(n), 0);
    const std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            int sum = 0;
            bool dec = true;
            for (int i = 0; i < n; ++i) {
                sum += t[static_cast<std::size_t>(i)];
                if (i > 0 && t[static_cast<std::size_t>(i - 1)] < t[static_cast<std::size_t>(i)])
                    dec = false;
            }
            if (dec && sum <= max_weight) out.push_back(t);
            return;
        }
        for (int v = 0; v <= max_weight; ++v) {
            t[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const int sa = std::accumulate(a.begin(), a.end(), 0);
        const int sb = std::accumulate(b.begin(), b.end(), 0);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

/// Composite Simpson integral on [0, 1] (odd point count).
inline double simpson01(const std::function<double(double)>& f, int intervals = 20000) {
    const double h = 1.0 / intervals;
    double acc = f(0.0) + f(1.0);
    for (int i = 1; i < intervals; ++i) acc += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

inline double rel_deviation(Cplx a, Cplx b) {
    return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

} // namespace oracle
