#pragma once

#include <cstdint>

#include "bsq/params.hpp"
#include "bsq/spectral_field.hpp"

namespace bsq {

/// Buoyancy and vorticity on the torus at one time. Both fields are kept
/// mean-zero and real (Hermitian).
struct State {
  SpectralField b;
  SpectralField omega;
  double time = 0.0;

  explicit State(const Lattice& lattice) : b(lattice), omega(lattice) {}
  State(SpectralField b_, SpectralField omega_, double t = 0.0);

  const Lattice& lattice() const { return b.lattice(); }
};

/// Parameters of the band-limited random initial condition.
struct RandomFieldSpec {
  double amplitude = 1e-2;  // max |g(x)| of each field after scaling
  double k_min = 1.0;       // |xi| band, in wavenumber units
  double k_max = 8.0;
  double slope = 0.0;       // |coeff| ~ |xi|^-slope inside the band
  bool exclude_kx0 = false; // zero the xi1 = 0 line
  bool dealias = true;      // zero modes removed by the 2/3 rule
};

/// Random real field with uniformly distributed phases, deterministic in `seed`.
SpectralField random_field(const Lattice& lattice, const RandomFieldSpec& spec, std::uint64_t seed);

/// Random (b, omega) pair; the two fields use independent streams of `seed`.
State random_state(const Lattice& lattice, const RandomFieldSpec& spec, std::uint64_t seed);

struct EnergyReport {
  double energy = 0.0;       // ||b||^2 + ||Omega||^2
  double dissipation = 0.0;  // 2 alpha ||Omega||^2
};

/// Energy of the state, Omega = N (-Delta)^(-1/2) omega.
EnergyReport energy(const State& state, const PhysParams& params);

}  // namespace bsq
