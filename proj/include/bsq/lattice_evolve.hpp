#pragma once

#include "bsq/params.hpp"
#include "bsq/spectral_field.hpp"

namespace bsq {

struct LinearPair {
  SpectralField b;
  SpectralField Omega;
};

/// Applies the exact Green kernel mode by mode to (b^, Omega^) at time t.
LinearPair linear_evolve_lattice(const SpectralField& b, const SpectralField& Omega, const PhysParams& params,
                                 double t);

}  // namespace bsq
