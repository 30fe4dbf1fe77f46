#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "symkernel/determinant.hpp"
#include "symkernel/partition.hpp"
#include "symkernel/types.hpp"

namespace symkernel {

/// Elementary symmetric functions (phi_1, ..., phi_n) of z, by the stable
/// one-pass recurrence that multiplies out prod_i (t + z_i).
inline CVec elementary_symmetric(std::span<const Cplx> z) {
    const std::size_t n = z.size();
    CVec e(n + 1, Cplx(0.0, 0.0));
    e[0] = Cplx(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = std::min(i + 1, n); j >= 1; --j)
            e[j] += z[i] * e[j - 1];
    return CVec(e.begin() + 1, e.end());
}

/// Symmetrization map s(z) = (phi_1(z), ..., phi_n(z)); requires z in D^n
/// and tags the result with its preimage.
inline SymmetrizedPoint symmetrize(const PolydiscPoint& z) {
    require_in_polydisc(z, "symmetrize");
    return SymmetrizedPoint{elementary_symmetric(z), z};
}

/// Vandermonde product prod_{i<j} (z_i - z_j); this is the complex
/// Jacobian J_s of the symmetrization map and equals a_delta(z).
inline Cplx vandermonde(std::span<const Cplx> z) {
    Cplx v(1.0, 0.0);
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            v *= z[i] - z[j];
    return v;
}

namespace detail {

/// Powers z^0..z^kmax for each coordinate: pw[i][k] = z_i^k.
inline std::vector<CVec> power_table(std::span<const Cplx> z, int kmax) {
    std::vector<CVec> pw(z.size(), CVec(static_cast<std::size_t>(kmax) + 1));
    for (std::size_t i = 0; i < z.size(); ++i) {
        pw[i][0] = Cplx(1.0, 0.0);
        for (int k = 1; k <= kmax; ++k)
            pw[i][static_cast<std::size_t>(k)] =
                pw[i][static_cast<std::size_t>(k - 1)] * z[i];
    }
    return pw;
}

inline Cplx antisym_from_powers(std::span<const int> p,
                                const std::vector<CVec>& pw) {
    const int n = static_cast<int>(pw.size());
    std::vector<Cplx> mat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mat[static_cast<std::size_t>(i * n + j)] =
                pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(p[static_cast<std::size_t>(j)])];
    return lu_determinant_inplace(mat, n);
}

} // namespace detail

/// Anti-symmetrized monomial a_p(z) = det((z_i^{p_j})). The exponent
/// multi-index need not be decreasing; repeated exponents give equal
/// columns, returned as an exact 0.
inline Cplx antisymmetrized_monomial(std::span<const int> p, std::span<const Cplx> z) {
    if (p.size() != z.size())
        throw invalid_dimension_error("antisymmetrized_monomial: exponent/point size mismatch");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0)
            throw invalid_input_error("antisymmetrized_monomial: exponents must be >= 0");
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] == p[j]) return Cplx(0.0, 0.0);
    }
    int kmax = 0;
    for (int e : p) kmax = std::max(kmax, e);
    return detail::antisym_from_powers(p, detail::power_table(z, kmax));
}

namespace detail {

/// h_0..h_kmax via the Newton-style recurrence on the elementary
/// symmetric functions: h_k = sum_{i=1}^{min(k,n)} (-1)^{i-1} e_i h_{k-i}.
inline CVec homogeneous_table(std::span<const Cplx> z, int kmax) {
    const int n = static_cast<int>(z.size());
    const CVec e = elementary_symmetric(z);
    CVec h(static_cast<std::size_t>(std::max(kmax, 0)) + 1, Cplx(0.0, 0.0));
    h[0] = Cplx(1.0, 0.0);
    for (int k = 1; k <= kmax; ++k) {
        Cplx acc(0.0, 0.0);
        const int imax = std::min(k, n);
        for (int i = 1; i <= imax; ++i) {
            const Cplx term = e[static_cast<std::size_t>(i - 1)] *
                              h[static_cast<std::size_t>(k - i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        h[static_cast<std::size_t>(k)] = acc;
    }
    return h;
}

/// Jacobi-Trudi determinant det((h_{m_i - i + j})) given a precomputed
/// h-table covering indices up to m_0 + n - 1.
inline Cplx schur_from_table(std::span<const int> m, const CVec& h, int n) {
    std::vector<Cplx> mat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int idx = m[static_cast<std::size_t>(i)] - i + j;
            mat[static_cast<std::size_t>(i * n + j)] =
                (idx < 0) ? Cplx(0.0, 0.0) : h[static_cast<std::size_t>(idx)];
        }
    return lu_determinant_inplace(mat, n);
}

} // namespace detail

/// Complete homogeneous symmetric polynomial h_k(z); h_k = 0 for k < 0,
/// h_0 = 1.
inline Cplx complete_homogeneous(int k, std::span<const Cplx> z) {
    if (k < 0) return Cplx(0.0, 0.0);
    return detail::homogeneous_table(z, k)[static_cast<std::size_t>(k)];
}

/// Schur polynomial S_{m+delta}(z) via the Jacobi-Trudi determinant
/// det((h_{m_i - i + j})). Total on C^n, including coincident coordinates,
/// and agrees with the bialternant quotient wherever that is defined.
inline Cplx schur(const Partition& m, std::span<const Cplx> z) {
    const int n = m.length();
    if (static_cast<std::size_t>(n) != z.size())
        throw invalid_dimension_error("schur: partition/point size mismatch");
    const int kmax = m[0] + n - 1;
    return detail::schur_from_table(m.parts(), detail::homogeneous_table(z, kmax), n);
}

/// Bialternant quotient a_{m+delta}(z) / a_delta(z). Refuses points whose
/// minimum pairwise coordinate distance is below the degeneracy
/// threshold; use schur() there.
inline Cplx schur_bialternant(const Partition& m, std::span<const Cplx> z) {
    const int n = m.length();
    if (static_cast<std::size_t>(n) != z.size())
        throw invalid_dimension_error("schur_bialternant: partition/point size mismatch");
    if (is_degenerate(z))
        throw degenerate_point_error(
            "schur_bialternant: coordinates too close to the diagonal; use schur()");
    const StrictPartition p = StrictPartition::from_partition(m);
    return antisymmetrized_monomial(p.parts(), z) / vandermonde(z);
}

} // namespace symkernel
