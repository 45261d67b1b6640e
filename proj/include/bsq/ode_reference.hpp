#pragma once

#include "bsq/mat2.hpp"
#include "bsq/params.hpp"

namespace bsq {

/// Reference solution of dG/dt = -E(i mu) G, G(0) = I, by classical RK4 with
/// step doubling: (16 G_{dt/2} - G_dt) / 15. The n-step product is formed as a
/// power of the one-step matrix, which is exactly what n RK4 steps on the
/// linear system compute. The last step is shortened when dt does not divide t.
Mat2 rk4_reference_propagator(const PhysParams& params, double mu, double t, double dt);

}  // namespace bsq
