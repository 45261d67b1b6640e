#include "bsq/operators.hpp"

#include "bsq/multiplier.hpp"

namespace bsq {

Velocity vorticity_to_velocity(const SpectralField& omega) {
  const Lattice& lat = omega.lattice();
  const SpectralField phi = Multiplier::inverse_laplacian(lat).apply(omega);
  Velocity v{Multiplier::dy(lat).apply(phi), Multiplier::dx(lat).apply(phi)};
  v.w *= -1.0;
  return v;
}

SpectralField omega_to_Omega(const SpectralField& omega, const PhysParams& params) {
  return (Multiplier::frac_laplacian(omega.lattice(), -1.0) * params.bruntN).apply(omega);
}

SpectralField Omega_to_omega(const SpectralField& Omega, const PhysParams& params) {
  return (Multiplier::frac_laplacian(Omega.lattice(), 1.0) * (1.0 / params.bruntN)).apply(Omega);
}

SpectralField divergence(const SpectralField& u, const SpectralField& w) {
  const Lattice& lat = u.lattice();
  return Multiplier::dx(lat).apply(u) + Multiplier::dy(lat).apply(w);
}

SpectralField curl(const SpectralField& u, const SpectralField& w) {
  const Lattice& lat = u.lattice();
  return Multiplier::dy(lat).apply(u) - Multiplier::dx(lat).apply(w);
}

}  // namespace bsq
