#include "bsq/state.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "bsq/errors.hpp"
#include "bsq/fft.hpp"
#include "bsq/multiplier.hpp"
#include "bsq/operators.hpp"
#include "bsq/simd/kernels.hpp"
#include "bsq/sobolev.hpp"

namespace bsq {

State::State(SpectralField b_, SpectralField omega_, double t) : b(std::move(b_)), omega(std::move(omega_)), time(t) {
  require_same_lattice(b, omega);
}

namespace {

// Uniform double in [0, 1) from the top 53 bits; portable across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

SpectralField random_field(const Lattice& lat, const RandomFieldSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SpectralField f(lat);
  bool any = false;
  for (int row = 0; row < lat.rows(); ++row) {
    for (int col = 0; col < lat.cols(); ++col) {
      // Draw for every mode so the stream does not depend on the band.
      const double mag = unit(rng);
      const double phase = 2.0 * std::numbers::pi * unit(rng);
      const Vec2 xi = lat.xi_at(row, col);
      const double r = norm(xi);
      const int k = lat.k_of_row(row);
      const int l = lat.l_of_col(col);
      if (r == 0.0 || r < spec.k_min || r > spec.k_max) continue;
      if (spec.exclude_kx0 && k == 0) continue;
      if (spec.dealias && !dealias_keeps(lat, {k, l})) continue;
      if (lat.is_nyquist_row(row) || lat.is_nyquist_col(col)) continue;
      const double a = (0.5 + 0.5 * mag) * std::pow(r, -spec.slope);
      f.stored(row, col) = std::polar(a, phase);
      any = true;
    }
  }
  if (!any) throw RangeError("random field band selects no modes");
  f.hermitize();
  f.stored(0, 0) = 0.0;
  FftPlan fft(lat);
  std::vector<double> samples(lat.physical_size());
  fft.to_physical(f, samples);
  const double peak = kernels::max_abs(samples);
  f *= spec.amplitude / peak;
  return f;
}

State random_state(const Lattice& lat, const RandomFieldSpec& spec, std::uint64_t seed) {
  return State(random_field(lat, spec, seed), random_field(lat, spec, seed ^ 0x9E3779B97F4A7C15ULL), 0.0);
}

EnergyReport energy(const State& state, const PhysParams& params) {
  const SpectralField Omega = omega_to_Omega(state.omega, params);
  const double b2 = std::pow(sobolev_norm(state.b, 0.0, true), 2);
  const double o2 = std::pow(sobolev_norm(Omega, 0.0, true), 2);
  return {b2 + o2, 2.0 * params.alpha * o2};
}

}  // namespace bsq
