#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "symkernel/determinant.hpp"
#include "symkernel/partition.hpp"
#include "symkernel/pochhammer.hpp"
#include "symkernel/sparse_polynomial.hpp"
#include "symkernel/symmetric.hpp"
#include "symkernel/types.hpp"

namespace symkernel {

enum class EvalMethod { determinant, series, explicit_form, product };

inline const char* to_string(EvalMethod m) {
    switch (m) {
        case EvalMethod::determinant: return "determinant";
        case EvalMethod::series: return "series";
        case EvalMethod::explicit_form: return "explicit";
        case EvalMethod::product: return "product";
    }
    return "?";
}

/// Value of a kernel evaluation together with how it was obtained.
/// tail_estimate is present exactly when method == series.
struct KernelResult {
    Cplx value;
    EvalMethod method;
    std::optional<int> truncation_degree;
    std::optional<double> tail_estimate;
};

/// Series truncation used when a caller does not specify one. At
/// coordinate modulus <= 0.5 (rho <= 0.25) the tail is below 1e-17.
inline constexpr int kDefaultTruncation = 30;

namespace detail {

inline void require_kernel_args(std::span<const Cplx> z, std::span<const Cplx> w,
                                const char* what) {
    if (z.size() != w.size() || z.empty())
        throw invalid_dimension_error(std::string(what) + ": arguments must be "
                                      "non-empty complex vectors of equal length");
    require_in_polydisc(z, what);
    require_in_polydisc(w, what);
}

inline double series_ratio(std::span<const Cplx> z, std::span<const Cplx> w,
                           const char* what) {
    const double rho = max_modulus(z) * max_modulus(w);
    if (rho >= 1.0)
        throw no_convergence_error(std::string(what) +
                                   ": series does not converge (rho >= 1)");
    return rho;
}

/// Geometric tail majorant: each graded layer is bounded by a slowly
/// varying constant times rho^d, so the tail beyond degree D is
/// C rho^{D+1} / (1 - rho) with C calibrated from the last computed
/// layers and a safety factor of 10.
inline double geometric_tail(std::span<const double> layer_magnitudes, double rho,
                             double safety = 10.0) {
    if (layer_magnitudes.empty() || rho <= 0.0) return 0.0;
    const int top = static_cast<int>(layer_magnitudes.size()) - 1;
    double c = 0.0;
    for (int d = std::max(0, top - 2); d <= top; ++d) {
        const double mag = layer_magnitudes[static_cast<std::size_t>(d)];
        if (mag == 0.0) continue;
        const double scale = std::pow(rho, d);
        if (scale > 0.0) c = std::max(c, mag / scale);
    }
    return safety * c * std::pow(rho, top + 1) / (1.0 - rho);
}

/// Matrix ((1 - z_j conj(w_k))^{-lambda}), principal branch; valid since
/// Re(1 - z conj(w)) > 0 for |z|, |w| < 1.
inline std::vector<Cplx> resolvent_power_matrix(std::span<const Cplx> z,
                                                std::span<const Cplx> w,
                                                double lambda) {
    const int n = static_cast<int>(z.size());
    std::vector<Cplx> mat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            mat[static_cast<std::size_t>(j * n + k)] =
                std::pow(Cplx(1.0, 0.0) - z[static_cast<std::size_t>(j)] *
                                              std::conj(w[static_cast<std::size_t>(k)]),
                         -lambda);
    return mat;
}

/// All n-tuples of non-negative integers with sum == degree, lex order.
template <typename F>
void for_each_composition(int n, int degree, F&& f) {
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    const std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == n - 1) {
            m[static_cast<std::size_t>(pos)] = remaining;
            f(std::span<const int>(m));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            m[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
    };
    rec(0, degree);
}

} // namespace detail

/// Weighted Bergman kernel of the polydisc:
/// B_{D^n}^{(lambda)}(z, w) = prod_i (1 - z_i conj(w_i))^{-lambda}.
inline Cplx bergman_kernel_polydisc(const PolydiscPoint& z, const PolydiscPoint& w,
                                    const Weight& weight) {
    detail::require_kernel_args(z, w, "bergman_kernel_polydisc");
    Cplx prod(1.0, 0.0);
    for (std::size_t i = 0; i < z.size(); ++i)
        prod *= std::pow(Cplx(1.0, 0.0) - z[i] * std::conj(w[i]), -weight.lambda());
    return prod;
}

/// Reproducing kernel of the anti-symmetric subspace of the weighted
/// Bergman space on D^n, closed determinant form:
/// K_anti^(lambda)(z, w) = (1/n!) det((1 - z_j conj(w_k))^{-lambda}).
inline KernelResult kernel_anti_det(const PolydiscPoint& z, const PolydiscPoint& w,
                                    const Weight& weight) {
    detail::require_kernel_args(z, w, "kernel_anti_det");
    const int n = static_cast<int>(z.size());
    auto mat = detail::resolvent_power_matrix(z, w, weight.lambda());
    const Cplx det = lu_determinant_inplace(mat, n);
    return KernelResult{det / factorial(n), EvalMethod::determinant, std::nullopt,
                        std::nullopt};
}

/// Same kernel as an orthonormal-basis series over strict partitions
/// p = m + delta with |m| <= max_weight:
/// sum_p c_p^2 a_p(z) conj(a_p(w)), c_p^2 = (lambda)_p / (n! p!).
inline KernelResult kernel_anti_series(const PolydiscPoint& z, const PolydiscPoint& w,
                                       const Weight& weight,
                                       int max_weight = kDefaultTruncation) {
    detail::require_kernel_args(z, w, "kernel_anti_series");
    const double rho = detail::series_ratio(z, w, "kernel_anti_series");
    const int n = static_cast<int>(z.size());
    const int kmax = max_weight + n - 1;
    const auto pw_z = detail::power_table(z, kmax);
    const auto pw_w = detail::power_table(w, kmax);

    Cplx value(0.0, 0.0);
    std::vector<double> layers;
    layers.reserve(static_cast<std::size_t>(max_weight) + 1);
    for (int d = 0; d <= max_weight; ++d) {
        Cplx layer(0.0, 0.0);
        for (const Partition& m : partitions_of_weight(n, d)) {
            const StrictPartition p = StrictPartition::from_partition(m);
            const Cplx az = detail::antisym_from_powers(p.parts(), pw_z);
            const Cplx aw = detail::antisym_from_powers(p.parts(), pw_w);
            layer += basis_norm_constant_sq(p, weight) * az * std::conj(aw);
        }
        value += layer;
        layers.push_back(std::abs(layer));
    }
    return KernelResult{value, EvalMethod::series, max_weight,
                        detail::geometric_tail(layers, rho)};
}

/// ||J_s||_lambda^2 = ||a_delta||^2 = n! delta! / (lambda)_delta. For
/// n <= 8 numerator and denominator are exact in double precision, so the
/// landmark values 1 (lambda = 2) and n! (lambda = 1) come out exact.
inline double js_norm_sq(int n, const Weight& weight) {
    if (n < 1) throw invalid_dimension_error("js_norm_sq: dimension must be >= 1");
    const double lambda = weight.lambda();
    if (n <= 8) {
        double num = factorial(n), den = 1.0;
        for (int k = 0; k < n; ++k) {
            num *= factorial(k);
            den *= pochhammer(lambda, k);
        }
        return num / den;
    }
    double r = factorial(n);
    for (int k = 0; k < n; ++k) r /= pochhammer_over_factorial(lambda, k);
    return r;
}

/// Squared normalizer of the Schur basis vector on G_n:
/// chat_p^2 = ||J_s||_lambda^2 (lambda)_p / (n! p!). Consistent with the
/// unitarity of the embedding Gamma (so ||S_p|| = ||a_p|| / ||J_s||) and
/// with the determinant form of the symmetrized Bergman kernel; reduces
/// to chat_p = 1 in the Hardy case.
inline double symmetrized_norm_constant_sq(const StrictPartition& p, const Weight& weight) {
    return js_norm_sq(p.length(), weight) * basis_norm_constant_sq(p, weight);
}

/// Weighted Bergman kernel of the symmetrized polydisc, evaluated at
/// (s(z), s(w)). Determinant route:
///   (||J_s||^2 / n!) det((1 - z_j conj(w_k))^{-lambda}) / (a_delta(z) conj(a_delta(w)))
/// which refuses near-coincident coordinates; series route:
///   sum_p chat_p^2 S_p(z) conj(S_p(w))
/// with Jacobi-Trudi Schur values, total on all of D^n x D^n.
inline KernelResult bergman_kernel_symmetrized(const PolydiscPoint& z,
                                               const PolydiscPoint& w,
                                               const Weight& weight, EvalMethod method,
                                               int max_weight = kDefaultTruncation) {
    detail::require_kernel_args(z, w, "bergman_kernel_symmetrized");
    const int n = static_cast<int>(z.size());
    if (method == EvalMethod::determinant) {
        if (is_degenerate(z) || is_degenerate(w))
            throw degenerate_point_error(
                "bergman_kernel_symmetrized: coincident coordinates; use the series method");
        auto mat = detail::resolvent_power_matrix(z, w, weight.lambda());
        const Cplx det = lu_determinant_inplace(mat, n);
        const Cplx value = js_norm_sq(n, weight) / factorial(n) * det /
                           (vandermonde(z) * std::conj(vandermonde(w)));
        return KernelResult{value, EvalMethod::determinant, std::nullopt, std::nullopt};
    }
    if (method != EvalMethod::series)
        throw invalid_input_error(
            "bergman_kernel_symmetrized: method must be determinant or series");

    const double rho = detail::series_ratio(z, w, "bergman_kernel_symmetrized");
    const int kmax = max_weight + n - 1;
    const CVec hz = detail::homogeneous_table(z, kmax);
    const CVec hw = detail::homogeneous_table(w, kmax);

    Cplx value(0.0, 0.0);
    std::vector<double> layers;
    layers.reserve(static_cast<std::size_t>(max_weight) + 1);
    for (int d = 0; d <= max_weight; ++d) {
        Cplx layer(0.0, 0.0);
        for (const Partition& m : partitions_of_weight(n, d)) {
            const StrictPartition p = StrictPartition::from_partition(m);
            const Cplx sz = detail::schur_from_table(m.parts(), hz, n);
            const Cplx sw = detail::schur_from_table(m.parts(), hw, n);
            layer += symmetrized_norm_constant_sq(p, weight) * sz * std::conj(sw);
        }
        value += layer;
        layers.push_back(std::abs(layer));
    }
    return KernelResult{value, EvalMethod::series, max_weight,
                        detail::geometric_tail(layers, rho)};
}

/// True iff u = (u1, u2) lies in G_2, i.e. the roots of
/// t^2 - u1 t + u2 both lie in the open unit disc.
inline bool in_symmetrized_bidisc(std::span<const Cplx> u) {
    if (u.size() != 2) return false;
    const Cplx disc = std::sqrt(u[0] * u[0] - 4.0 * u[1]);
    const Cplx r1 = 0.5 * (u[0] + disc);
    const Cplx r2 = 0.5 * (u[0] - disc);
    return std::abs(r1) < 1.0 && std::abs(r2) < 1.0;
}

/// Closed rational form of the Bergman kernel (lambda = 2) on the
/// symmetrized bidisc:
///   (1/2) (2(1 + u2 conj(v2)) - u1 conj(v1))
///       / ((1 - u2 conj(v2))^2 - (u1 - u2 conj(v1)) (conj(v1) - conj(v2) u1))^2.
inline Cplx g2_bergman_explicit(const SymmetrizedPoint& u, const SymmetrizedPoint& v) {
    if (u.coords.size() != 2 || v.coords.size() != 2)
        throw invalid_dimension_error("g2_bergman_explicit: points must have 2 coordinates");
    if (!in_symmetrized_bidisc(u.coords) || !in_symmetrized_bidisc(v.coords))
        throw domain_error("g2_bergman_explicit: point outside the symmetrized bidisc");
    const Cplx u1 = u.coords[0], u2 = u.coords[1];
    const Cplx v1c = std::conj(v.coords[0]), v2c = std::conj(v.coords[1]);
    const Cplx base = (1.0 - u2 * v2c) * (1.0 - u2 * v2c) - (u1 - u2 * v1c) * (v1c - v2c * u1);
    const Cplx den = base * base;
    if (std::abs(den) < 1e-150)
        throw singular_evaluation_error("g2_bergman_explicit: vanishing denominator");
    return 0.5 * (2.0 * (1.0 + u2 * v2c) - u1 * v1c) / den;
}

/// Szego kernel of the symmetrized polydisc at (s(z), s(w)).
/// product:     prod_{j,k} (1 - z_j conj(w_k))^{-1}
/// determinant: det((1 - z_j conj(w_k))^{-1}) / (J_s(z) conj(J_s(w)))
/// series:      sum_{|m| <= D} S_p(z) conj(S_p(w))   (Cauchy identity)
inline KernelResult szego_kernel_symmetrized(const PolydiscPoint& z,
                                             const PolydiscPoint& w, EvalMethod method,
                                             int max_weight = kDefaultTruncation) {
    detail::require_kernel_args(z, w, "szego_kernel_symmetrized");
    const int n = static_cast<int>(z.size());
    switch (method) {
        case EvalMethod::product: {
            Cplx prod(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    prod *= Cplx(1.0, 0.0) - z[static_cast<std::size_t>(j)] *
                                                 std::conj(w[static_cast<std::size_t>(k)]);
            return KernelResult{1.0 / prod, EvalMethod::product, std::nullopt,
                                std::nullopt};
        }
        case EvalMethod::determinant: {
            if (is_degenerate(z) || is_degenerate(w))
                throw degenerate_point_error(
                    "szego_kernel_symmetrized: coincident coordinates; use series or product");
            auto mat = detail::resolvent_power_matrix(z, w, 1.0);
            const Cplx det = lu_determinant_inplace(mat, n);
            const Cplx value = det / (vandermonde(z) * std::conj(vandermonde(w)));
            return KernelResult{value, EvalMethod::determinant, std::nullopt,
                                std::nullopt};
        }
        case EvalMethod::series: {
            const double rho = detail::series_ratio(z, w, "szego_kernel_symmetrized");
            const int kmax = max_weight + n - 1;
            const CVec hz = detail::homogeneous_table(z, kmax);
            const CVec hw = detail::homogeneous_table(w, kmax);
            Cplx value(0.0, 0.0);
            std::vector<double> layers;
            for (int d = 0; d <= max_weight; ++d) {
                Cplx layer(0.0, 0.0);
                for (const Partition& m : partitions_of_weight(n, d)) {
                    const Cplx sz = detail::schur_from_table(m.parts(), hz, n);
                    const Cplx sw = detail::schur_from_table(m.parts(), hw, n);
                    layer += sz * std::conj(sw);
                }
                value += layer;
                layers.push_back(std::abs(layer));
            }
            return KernelResult{value, EvalMethod::series, max_weight,
                                detail::geometric_tail(layers, rho)};
        }
        default:
            throw invalid_input_error(
                "szego_kernel_symmetrized: method must be product, determinant or series");
    }
}

/// Hardy-space limit of the anti-symmetric kernel; same code path as
/// kernel_anti_det with lambda = 1.
inline KernelResult hardy_kernel_anti(const PolydiscPoint& z, const PolydiscPoint& w) {
    return kernel_anti_det(z, w, Weight(1.0));
}

/// Projection onto the sign-isotypic component:
/// (P_sgn f)(z) = (1/n!) sum_tau sgn(tau) f(tau^{-1} z), applied at the
/// coefficient level. Monomials with repeated exponents cancel exactly.
inline SparsePolynomial project_sign(const SparsePolynomial& f) {
    const int n = f.nvars();
    SparsePolynomial out(n, f.prune_threshold());
    const double scale = 1.0 / factorial(n);
    for (const auto& [e, c] : f.terms()) {
        for_each_permutation(n, [&](std::span<const int> perm, int sign) {
            std::vector<int> pe(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                pe[static_cast<std::size_t>(i)] =
                    e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            out.add_term(std::move(pe), c * (sign * scale));
        });
    }
    return out;
}

/// Kernel of the sign-isotypic subspace, built by projecting each graded
/// layer of the truncated polydisc-kernel expansion
/// sum_m ((lambda)_m / m!) z^m conj(w)^m through P_sgn on both slots.
/// The multi-index cutoff |m| <= max_weight + |delta| makes the result
/// match kernel_anti_series(z, w, lambda, max_weight) term for term.
inline KernelResult kernel_sgn(const PolydiscPoint& z, const PolydiscPoint& w,
                               const Weight& weight, int max_weight = kDefaultTruncation) {
    detail::require_kernel_args(z, w, "kernel_sgn");
    const double rho = detail::series_ratio(z, w, "kernel_sgn");
    const int n = static_cast<int>(z.size());
    const int total_degree = max_weight + n * (n - 1) / 2;

    Cplx value(0.0, 0.0);
    std::vector<double> layers;
    for (int d = 0; d <= total_degree; ++d) {
        Cplx layer(0.0, 0.0);
        detail::for_each_composition(n, d, [&](std::span<const int> m) {
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = i + 1; j < m.size(); ++j)
                    if (m[i] == m[j]) return; // projects to 0
            const SparsePolynomial proj = project_sign(
                SparsePolynomial::monomial(std::vector<int>(m.begin(), m.end())));
            double coef = 1.0;
            for (int mi : m) coef *= pochhammer_over_factorial(weight.lambda(), mi);
            layer += coef * proj.evaluate(z) * std::conj(proj.evaluate(w));
        });
        value += layer;
        layers.push_back(std::abs(layer));
    }
    return KernelResult{value, EvalMethod::series, max_weight,
                        detail::geometric_tail(layers, rho)};
}

} // namespace symkernel
