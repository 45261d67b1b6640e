#pragma once

#include "bsq/mat2.hpp"
#include "bsq/params.hpp"
#include "bsq/propagator.hpp"

namespace bsq {

/// True when |mu| < alpha / (2N): real, distinct eigenvalues with lambda_- < alpha/2.
bool in_slow_regime(const PhysParams& params, double mu);

/// Small-mu Taylor approximations (alpha - N^2 mu^2 / alpha, N^2 mu^2 / alpha).
/// Throws RegimeError outside the slow regime.
EigenPair eigen_expansion_slow(const PhysParams& params, double mu);

/// Truncated expansion of the slow eigenprojector, Q0 + i mu P1 + (i mu)^2 P2
/// with Q0 = diag(1, 0), P1 = (N/alpha) [[0, 1], [1, 0]],
/// P2 = diag(-N^2/alpha^2, N^2/alpha^2). `order` is 0, 1 or 2.
Mat2 projector_expansion(const PhysParams& params, double mu, int order);

/// Two-term slow-regime kernel with c = cos(theta):
///   S(c) exp(-(N^2/alpha) c^2 t) + F(c) exp(-(alpha/2) t)
/// where S is the second-order projector expansion and
/// F = [[-N^2 c^2/alpha^2, -i N c/alpha], [-i N c/alpha, N^2 c^2/alpha^2]]
/// is the complementary matrix exactly as displayed alongside it (it omits the
/// identity's (2,2) entry, so kernel_slow(theta, 0) != I away from first order).
/// Throws RegimeError when |cos(theta)| >= alpha / (2N).
Mat2 kernel_slow(const PhysParams& params, double theta, double t);

}  // namespace bsq
