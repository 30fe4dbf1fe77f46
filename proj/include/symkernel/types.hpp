#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "symkernel/errors.hpp"

namespace symkernel {

using Cplx = std::complex<double>;
using CVec = std::vector<Cplx>;

/// A point of the unit polydisc D^n. Plain complex vector; membership in
/// the open polydisc is enforced only where a kernel formula needs it
/// (symmetric-function evaluation accepts arbitrary complex vectors).
using PolydiscPoint = CVec;

/// Weight parameter selecting the Hilbert space family: lambda = 1 is the
/// Hardy space, lambda > 1 the weighted Bergman family (lambda = 2
/// unweighted).
class Weight {
  public:
    explicit Weight(double lambda) : lambda_(lambda) {
        if (!(lambda >= 1.0))
            throw invalid_weight_error("weight lambda must satisfy lambda >= 1");
    }

    double lambda() const { return lambda_; }
    bool is_hardy() const { return lambda_ == 1.0; }

  private:
    double lambda_;
};

inline double max_modulus(std::span<const Cplx> z) {
    double m = 0.0;
    for (const Cplx& c : z) m = std::max(m, std::abs(c));
    return m;
}

/// Throws domain_error unless every coordinate has modulus < 1.
inline void require_in_polydisc(std::span<const Cplx> z, const char* what) {
    for (const Cplx& c : z)
        if (!(std::abs(c) < 1.0))
            throw domain_error(std::string(what) +
                               ": coordinate modulus must be < 1");
}

/// Separation threshold below which bialternant quotients and
/// determinant-form symmetrized kernels refuse to evaluate.
inline double degeneracy_threshold(std::span<const Cplx> z) {
    return 1e-6 * (1.0 + max_modulus(z));
}

inline double min_pairwise_distance(std::span<const Cplx> z) {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            d = std::min(d, std::abs(z[i] - z[j]));
    return d;
}

inline bool is_degenerate(std::span<const Cplx> z) {
    return z.size() > 1 && min_pairwise_distance(z) < degeneracy_threshold(z);
}

/// Image of a polydisc point under the symmetrization map; remembers its
/// preimage when it was produced by symmetrize().
struct SymmetrizedPoint {
    CVec coords;
    std::optional<PolydiscPoint> provenance;
};

} // namespace symkernel
