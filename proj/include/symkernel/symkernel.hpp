#pragma once

// Reproducing kernels of weighted Bergman spaces and the Hardy space on
// the symmetrized polydisc G_n = s(D^n), where s maps a point of the
// polydisc to its elementary symmetric functions. The kernels are
// available both as closed determinantal formulas and as orthonormal
// series over Schur polynomials / anti-symmetrized monomials, together
// with the quadrature and Monte Carlo machinery that certifies the
// orthonormality and norm identities behind them.

#include "symkernel/errors.hpp"
#include "symkernel/types.hpp"
#include "symkernel/partition.hpp"
#include "symkernel/determinant.hpp"
#include "symkernel/symmetric.hpp"
#include "symkernel/pochhammer.hpp"
#include "symkernel/sparse_polynomial.hpp"
#include "symkernel/kernels.hpp"
#include "symkernel/quadrature.hpp"
#include "symkernel/sampling.hpp"
