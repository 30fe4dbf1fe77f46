#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Eigenvalues>

#include "symkernel/partition.hpp"
#include "symkernel/pochhammer.hpp"
#include "symkernel/sparse_polynomial.hpp"
#include "symkernel/symmetric.hpp"
#include "symkernel/types.hpp"

namespace symkernel {

/// ||z^m||^2 = prod_i m_i! / (lambda)_{m_i} under the weighted measure on
/// D^n (lambda > 1) or the torus measure (lambda = 1, where every
/// monomial is a unit vector).
inline double monomial_norm_sq(std::span<const int> m, const Weight& weight) {
    double r = 1.0;
    for (int mi : m) {
        if (mi < 0) throw invalid_input_error("monomial_norm_sq: exponents must be >= 0");
        r /= pochhammer_over_factorial(weight.lambda(), mi);
    }
    return r;
}

/// Exact inner product of two polynomials from monomial orthogonality:
/// <f, g> = sum_a f_a conj(g_a) ||z^a||^2.
inline Cplx inner_product_analytic(const SparsePolynomial& f, const SparsePolynomial& g,
                                   const Weight& weight) {
    if (f.nvars() != g.nvars())
        throw invalid_dimension_error("inner_product_analytic: variable count mismatch");
    const bool f_smaller = f.term_count() <= g.term_count();
    const SparsePolynomial& a = f_smaller ? f : g;
    const SparsePolynomial& b = f_smaller ? g : f;
    Cplx acc(0.0, 0.0);
    for (const auto& [e, c] : a.terms()) {
        const Cplx other = b.coefficient(e);
        if (other == Cplx(0.0, 0.0)) continue;
        const Cplx fa = f_smaller ? c : other;
        const Cplx ga = f_smaller ? other : c;
        acc += fa * std::conj(ga) * monomial_norm_sq(e, weight);
    }
    return acc;
}

/// Tensor quadrature rule on D^n (lambda > 1) or T^n (lambda = 1) that
/// integrates every monomial z^a conj(z)^b with per-coordinate degrees
/// max(a_i, b_i) <= exact_degree. Weights are positive and sum to 1.
struct QuadratureRule {
    std::vector<PolydiscPoint> nodes;
    std::vector<double> weights;
    int exact_degree;
    Weight lambda;
};

namespace detail {

struct Rule1D {
    CVec nodes;
    std::vector<double> weights;
};

/// Gauss-Jacobi nodes/weights for the probability density
/// (lambda-1)(1-t)^(lambda-2) on [0,1], by Golub-Welsch on the symmetric
/// tridiagonal Jacobi matrix of the (alpha, 0) Jacobi weight.
inline void gauss_jacobi_radial(int k, double lambda, std::vector<double>& t,
                                std::vector<double>& u) {
    const double alpha = lambda - 2.0;
    const double beta = 0.0;
    Eigen::VectorXd diag(k);
    Eigen::VectorXd sub(std::max(k - 1, 0));
    diag(0) = (beta - alpha) / (alpha + beta + 2.0);
    for (int i = 1; i < k; ++i) {
        const double ab = 2.0 * i + alpha + beta;
        diag(i) = (beta * beta - alpha * alpha) / (ab * (ab + 2.0));
        const double b2 = 4.0 * i * (i + alpha) * (i + beta) * (i + alpha + beta) /
                          (ab * ab * (ab + 1.0) * (ab - 1.0));
        sub(i - 1) = std::sqrt(b2);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    t.resize(static_cast<std::size_t>(k));
    u.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        t[static_cast<std::size_t>(i)] = 0.5 * (es.eigenvalues()(i) + 1.0);
        const double v0 = es.eigenvectors()(0, i);
        u[static_cast<std::size_t>(i)] = v0 * v0; // first components sum to 1
    }
}

inline Rule1D coordinate_rule(const Weight& weight, int exact_degree) {
    Rule1D r;
    const int ntheta = exact_degree + 1;
    if (weight.is_hardy()) {
        for (int k = 0; k < ntheta; ++k) {
            const double th = 2.0 * std::numbers::pi * k / ntheta;
            r.nodes.push_back(std::polar(1.0, th));
            r.weights.push_back(1.0 / ntheta);
        }
        return r;
    }
    const int nradial = (exact_degree + 3) / 2; // ceil((exact_degree + 2) / 2)
    std::vector<double> t, u;
    gauss_jacobi_radial(nradial, weight.lambda(), t, u);
    for (int i = 0; i < nradial; ++i) {
        const double radius = std::sqrt(t[static_cast<std::size_t>(i)]);
        for (int k = 0; k < ntheta; ++k) {
            const double th = 2.0 * std::numbers::pi * k / ntheta;
            r.nodes.push_back(std::polar(radius, th));
            r.weights.push_back(u[static_cast<std::size_t>(i)] / ntheta);
        }
    }
    return r;
}

} // namespace detail

inline QuadratureRule build_rule(int n, const Weight& weight, int exact_degree) {
    if (n < 1) throw invalid_dimension_error("build_rule: dimension must be >= 1");
    if (exact_degree < 0)
        throw invalid_input_error("build_rule: exact_degree must be >= 0");
    const detail::Rule1D one = detail::coordinate_rule(weight, exact_degree);
    const std::size_t m = one.nodes.size();

    QuadratureRule rule{{}, {}, exact_degree, weight};
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= m;
    rule.nodes.reserve(total);
    rule.weights.reserve(total);

    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    for (std::size_t count = 0; count < total; ++count) {
        PolydiscPoint node(static_cast<std::size_t>(n));
        double w = 1.0;
        for (int i = 0; i < n; ++i) {
            node[static_cast<std::size_t>(i)] = one.nodes[idx[static_cast<std::size_t>(i)]];
            w *= one.weights[idx[static_cast<std::size_t>(i)]];
        }
        rule.nodes.push_back(std::move(node));
        rule.weights.push_back(w);
        for (int i = n - 1; i >= 0; --i) {
            if (++idx[static_cast<std::size_t>(i)] < m) break;
            idx[static_cast<std::size_t>(i)] = 0;
        }
    }
    return rule;
}

/// sum_k w_k f(x_k) conj(g(x_k)); any evaluation failure propagates.
template <typename F, typename G>
Cplx inner_product_numeric(F&& f, G&& g, const QuadratureRule& rule) {
    Cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        acc += rule.weights[k] * f(std::span<const Cplx>(rule.nodes[k])) *
               std::conj(g(std::span<const Cplx>(rule.nodes[k])));
    return acc;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Per-block substream seed; blocks are independent of thread count, so
/// any contiguous-block parallel split reproduces the serial stream.
inline std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
    return splitmix64(seed ^ splitmix64(block + 1));
}

inline double canonical_uniform(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// One sample of the product measure: per coordinate, t = |z|^2 follows
/// Beta(1, lambda-1) via inverse CDF t = 1 - u^{1/(lambda-1)} and the
/// angle is uniform; on the torus (lambda = 1) only the angle is drawn.
inline void sample_point(std::mt19937_64& g, const Weight& weight, PolydiscPoint& z) {
    const double lambda = weight.lambda();
    for (Cplx& c : z) {
        if (weight.is_hardy()) {
            c = std::polar(1.0, 2.0 * std::numbers::pi * canonical_uniform(g));
        } else {
            const double t = 1.0 - std::pow(canonical_uniform(g), 1.0 / (lambda - 1.0));
            c = std::polar(std::sqrt(t), 2.0 * std::numbers::pi * canonical_uniform(g));
        }
    }
}

inline constexpr std::int64_t kMcBlock = 65536;

} // namespace detail

struct McEstimate {
    Cplx value;
    double standard_error;
};

/// Monte Carlo estimate of <f, g> with a 1-sigma standard error. The
/// 64-bit seed fully determines the sample stream (block substreams of
/// 65536 samples, accumulated in block order).
template <typename F, typename G>
McEstimate monte_carlo_inner_product(F&& f, G&& g, int n, const Weight& weight,
                                     std::int64_t samples, std::uint64_t seed) {
    if (n < 1) throw invalid_dimension_error("monte_carlo_inner_product: n must be >= 1");
    if (samples < 1)
        throw invalid_input_error("monte_carlo_inner_product: need at least one sample");
    Cplx sum(0.0, 0.0);
    double sumsq = 0.0;
    PolydiscPoint z(static_cast<std::size_t>(n));
    const std::int64_t nblocks = (samples + detail::kMcBlock - 1) / detail::kMcBlock;
    for (std::int64_t b = 0; b < nblocks; ++b) {
        std::mt19937_64 gen(detail::block_seed(seed, static_cast<std::uint64_t>(b)));
        const std::int64_t in_block =
            std::min<std::int64_t>(detail::kMcBlock, samples - b * detail::kMcBlock);
        Cplx bsum(0.0, 0.0);
        double bsumsq = 0.0;
        for (std::int64_t s = 0; s < in_block; ++s) {
            detail::sample_point(gen, weight, z);
            const Cplx term = f(std::span<const Cplx>(z)) *
                              std::conj(g(std::span<const Cplx>(z)));
            bsum += term;
            bsumsq += std::norm(term);
        }
        sum += bsum;
        sumsq += bsumsq;
    }
    const double count = static_cast<double>(samples);
    const Cplx mean = sum / count;
    const double var = std::max(0.0, sumsq / count - std::norm(mean));
    return McEstimate{mean, std::sqrt(var / count)};
}

enum class GramMethod { analytic, quadrature, montecarlo };

inline const char* to_string(GramMethod m) {
    switch (m) {
        case GramMethod::analytic: return "analytic";
        case GramMethod::quadrature: return "quadrature";
        case GramMethod::montecarlo: return "montecarlo";
    }
    return "?";
}

/// Gram matrix of the normalized anti-symmetric basis {e_p = c_p a_p}
/// together with its distance from the identity. stderrs is populated by
/// the Monte Carlo method only.
struct GramReport {
    std::vector<StrictPartition> basis_labels;
    std::vector<std::vector<Cplx>> matrix;
    double max_offdiag;
    double max_diag_error;
    GramMethod method;
    std::optional<std::vector<std::vector<double>>> stderrs;
};

struct GramOptions {
    std::int64_t mc_samples = 200000;
    std::uint64_t seed = 0;
    double prune_threshold = 0.0; // analytic basis polynomials
};

namespace detail {

inline void gram_deviation_summary(GramReport& report) {
    const std::size_t b = report.matrix.size();
    report.max_offdiag = 0.0;
    report.max_diag_error = 0.0;
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) {
            if (i == j)
                report.max_diag_error =
                    std::max(report.max_diag_error, std::abs(report.matrix[i][j] - 1.0));
            else
                report.max_offdiag = std::max(report.max_offdiag, std::abs(report.matrix[i][j]));
        }
}

/// Values of every e_p at one point, sharing a single power table.
inline void basis_values(std::span<const StrictPartition> parts,
                         std::span<const double> constants, std::span<const Cplx> z,
                         int max_power, std::vector<Cplx>& out) {
    const auto pw = power_table(z, max_power);
    out.resize(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        out[i] = constants[i] * antisym_from_powers(parts[i].parts(), pw);
}

} // namespace detail

inline GramReport gram_matrix(std::span<const StrictPartition> partitions,
                              const Weight& weight, GramMethod method,
                              const GramOptions& options = {}) {
    if (partitions.empty())
        throw invalid_input_error("gram_matrix: need at least one basis label");
    const int n = partitions[0].length();
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        if (partitions[i].length() != n)
            throw invalid_dimension_error("gram_matrix: basis labels of mixed length");
        for (std::size_t j = i + 1; j < partitions.size(); ++j)
            if (partitions[i] == partitions[j])
                throw invalid_input_error("gram_matrix: duplicate basis labels");
    }

    const std::size_t b = partitions.size();
    GramReport report{std::vector<StrictPartition>(partitions.begin(), partitions.end()),
                      std::vector<std::vector<Cplx>>(b, std::vector<Cplx>(b, Cplx(0.0, 0.0))),
                      0.0,
                      0.0,
                      method,
                      std::nullopt};

    std::vector<double> constants(b);
    int max_power = 0;
    for (std::size_t i = 0; i < b; ++i) {
        constants[i] = basis_norm_constant(partitions[i], weight);
        max_power = std::max(max_power, partitions[i][0]);
    }

    switch (method) {
        case GramMethod::analytic: {
            std::vector<SparsePolynomial> basis;
            basis.reserve(b);
            for (std::size_t i = 0; i < b; ++i)
                basis.push_back(antisymmetrized_monomial_poly(
                    partitions[i].parts(), constants[i], options.prune_threshold));
            for (std::size_t i = 0; i < b; ++i)
                for (std::size_t j = i; j < b; ++j) {
                    const Cplx v = inner_product_analytic(basis[i], basis[j], weight);
                    report.matrix[i][j] = v;
                    report.matrix[j][i] = std::conj(v);
                }
            break;
        }
        case GramMethod::quadrature: {
            const QuadratureRule rule = build_rule(n, weight, max_power);
            std::vector<Cplx> vals;
            for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                detail::basis_values(partitions, constants, rule.nodes[k], max_power, vals);
                for (std::size_t i = 0; i < b; ++i)
                    for (std::size_t j = i; j < b; ++j)
                        report.matrix[i][j] += rule.weights[k] * vals[i] * std::conj(vals[j]);
            }
            for (std::size_t i = 0; i < b; ++i)
                for (std::size_t j = i + 1; j < b; ++j)
                    report.matrix[j][i] = std::conj(report.matrix[i][j]);
            break;
        }
        case GramMethod::montecarlo: {
            if (options.mc_samples < 1)
                throw invalid_input_error("gram_matrix: need at least one sample");
            std::vector<std::vector<double>> sumsq(b, std::vector<double>(b, 0.0));
            std::vector<Cplx> vals;
            PolydiscPoint z(static_cast<std::size_t>(n));
            const std::int64_t nblocks =
                (options.mc_samples + detail::kMcBlock - 1) / detail::kMcBlock;
            for (std::int64_t blk = 0; blk < nblocks; ++blk) {
                std::mt19937_64 gen(
                    detail::block_seed(options.seed, static_cast<std::uint64_t>(blk)));
                const std::int64_t in_block = std::min<std::int64_t>(
                    detail::kMcBlock, options.mc_samples - blk * detail::kMcBlock);
                for (std::int64_t s = 0; s < in_block; ++s) {
                    detail::sample_point(gen, weight, z);
                    detail::basis_values(partitions, constants, z, max_power, vals);
                    for (std::size_t i = 0; i < b; ++i)
                        for (std::size_t j = i; j < b; ++j) {
                            const Cplx term = vals[i] * std::conj(vals[j]);
                            report.matrix[i][j] += term;
                            sumsq[i][j] += std::norm(term);
                        }
                }
            }
            const double count = static_cast<double>(options.mc_samples);
            report.stderrs.emplace(b, std::vector<double>(b, 0.0));
            for (std::size_t i = 0; i < b; ++i)
                for (std::size_t j = i; j < b; ++j) {
                    report.matrix[i][j] /= count;
                    const double var = std::max(
                        0.0, sumsq[i][j] / count - std::norm(report.matrix[i][j]));
                    const double se = std::sqrt(var / count);
                    (*report.stderrs)[i][j] = se;
                    (*report.stderrs)[j][i] = se;
                    report.matrix[j][i] = std::conj(report.matrix[i][j]);
                }
            break;
        }
    }
    detail::gram_deviation_summary(report);
    return report;
}

} // namespace symkernel
