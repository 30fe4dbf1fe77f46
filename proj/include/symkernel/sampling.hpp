#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "symkernel/types.hpp"

namespace symkernel {

/// Deterministic stream of test points: coordinates uniform in the closed
/// disc of the given radius.
class PointSampler {
  public:
    explicit PointSampler(std::uint64_t seed) : gen_(seed) {}

    Cplx coordinate(double radius) {
        const double r = radius * std::sqrt(uniform());
        const double th = 2.0 * std::numbers::pi * uniform();
        return std::polar(r, th);
    }

    PolydiscPoint point(int n, double radius) {
        PolydiscPoint z(static_cast<std::size_t>(n));
        for (Cplx& c : z) c = coordinate(radius);
        return z;
    }

    /// Redraws until the coordinates clear the degeneracy threshold, so
    /// determinant-route kernels accept the point.
    PolydiscPoint nondegenerate_point(int n, double radius) {
        for (;;) {
            PolydiscPoint z = point(n, radius);
            if (!is_degenerate(z)) return z;
        }
    }

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 gen_;
};

} // namespace symkernel
