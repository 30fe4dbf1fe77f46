#pragma once

#include <iterator>
#include <map>
#include <span>
#include <vector>

#include "symkernel/partition.hpp"
#include "symkernel/types.hpp"

namespace symkernel {

/// Polynomial in n variables stored as multi-index -> complex coefficient.
/// The exact carrier for anti-symmetrizations, basis vectors, and kernel
/// sections; evaluation is the plain finite monomial sum.
class SparsePolynomial {
  public:
    using TermMap = std::map<std::vector<int>, Cplx>;

    explicit SparsePolynomial(int nvars, double prune_threshold = 0.0)
        : nvars_(nvars), prune_threshold_(prune_threshold) {
        if (nvars < 1)
            throw invalid_dimension_error("SparsePolynomial: nvars must be >= 1");
    }

    static SparsePolynomial monomial(std::vector<int> exponents, Cplx coef = Cplx(1.0, 0.0)) {
        SparsePolynomial p(static_cast<int>(exponents.size()));
        p.add_term(std::move(exponents), coef);
        return p;
    }

    int nvars() const { return nvars_; }
    double prune_threshold() const { return prune_threshold_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(std::vector<int> exponents, Cplx coef) {
        check_index(exponents);
        auto it = terms_.find(exponents);
        if (it == terms_.end()) {
            if (keep(coef)) terms_.emplace(std::move(exponents), coef);
        } else {
            it->second += coef;
            if (!keep(it->second)) terms_.erase(it);
        }
    }

    Cplx coefficient(std::span<const int> exponents) const {
        auto it = terms_.find(std::vector<int>(exponents.begin(), exponents.end()));
        return it == terms_.end() ? Cplx(0.0, 0.0) : it->second;
    }

    Cplx evaluate(std::span<const Cplx> z) const {
        if (z.size() != static_cast<std::size_t>(nvars_))
            throw invalid_dimension_error("SparsePolynomial::evaluate: wrong point size");
        Cplx acc(0.0, 0.0);
        for (const auto& [e, c] : terms_) {
            Cplx mon(1.0, 0.0);
            for (int i = 0; i < nvars_; ++i) {
                const int k = e[static_cast<std::size_t>(i)];
                Cplx pw(1.0, 0.0);
                for (int s = 0; s < k; ++s) pw *= z[static_cast<std::size_t>(i)];
                mon *= pw;
            }
            acc += c * mon;
        }
        return acc;
    }

    void scale(Cplx factor) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= factor;
            it = keep(it->second) ? std::next(it) : terms_.erase(it);
        }
    }

    /// Drops every stored coefficient with modulus <= threshold.
    void prune(double threshold) {
        prune_threshold_ = threshold;
        for (auto it = terms_.begin(); it != terms_.end();)
            it = keep(it->second) ? std::next(it) : terms_.erase(it);
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int v : e) s += v;
            d = std::max(d, s);
        }
        return d;
    }

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

  private:
    // Exact zeros are always dropped; a positive threshold prunes below it.
    bool keep(Cplx c) const { return std::abs(c) > prune_threshold_; }

    void check_index(const std::vector<int>& e) const {
        if (e.size() != static_cast<std::size_t>(nvars_))
            throw invalid_dimension_error("SparsePolynomial: multi-index has wrong length");
        for (int v : e)
            if (v < 0) throw invalid_input_error("SparsePolynomial: exponents must be >= 0");
    }

    int nvars_;
    double prune_threshold_;
    TermMap terms_;
};

/// a_p = sum_sigma sgn(sigma) z^{p_sigma} as an exact polynomial, scaled
/// by `coef`. Repeated entries in p cancel to the zero polynomial.
inline SparsePolynomial antisymmetrized_monomial_poly(std::span<const int> p,
                                                      Cplx coef = Cplx(1.0, 0.0),
                                                      double prune_threshold = 0.0) {
    const int n = static_cast<int>(p.size());
    SparsePolynomial out(n, prune_threshold);
    for_each_permutation(n, [&](std::span<const int> perm, int sign) {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            e[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        out.add_term(std::move(e), static_cast<double>(sign) * coef);
    });
    return out;
}

} // namespace symkernel
