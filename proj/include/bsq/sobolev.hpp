#pragma once

#include "bsq/spectral_field.hpp"

namespace bsq {

/// Optional derivative factor in a norm: xi1^2 (d_x) or xi2^2 (d_y).
enum class DerivWeight { none, dx, dy };

/// Sobolev norm on the torus with the Parseval factor lx * ly:
///   homogeneous:     ( lx ly sum |xi|^(2s) |c|^2 )^(1/2)
///   non-homogeneous: ( lx ly sum (1 + |xi|^2)^s |c|^2 )^(1/2)
/// The homogeneous weight at xi = 0 is 1 for s = 0 and 0 for s > 0; for s < 0
/// the mean must vanish (GaugeError otherwise). Sums run in storage order
/// through kernels::weighted_sq_sum.
double sobolev_norm(const SpectralField& field, double s, bool homogeneous,
                    DerivWeight deriv = DerivWeight::none);

/// Plain L2 norm of physical samples on the lattice grid (cell-area weighted).
double grid_l2_norm(const Lattice& lattice, std::span<const double> samples);

}  // namespace bsq
