#pragma once

#include "bsq/params.hpp"
#include "bsq/spectral_field.hpp"

namespace bsq {

struct Velocity {
  SpectralField u;
  SpectralField w;
};

/// Biot-Savart law: phi = Delta^-1 omega, u = d_y phi, w = -d_x phi.
Velocity vorticity_to_velocity(const SpectralField& omega);

/// Omega = N (-Delta)^(-1/2) omega.
SpectralField omega_to_Omega(const SpectralField& omega, const PhysParams& params);
/// omega = N^-1 (-Delta)^(1/2) Omega.
SpectralField Omega_to_omega(const SpectralField& Omega, const PhysParams& params);

/// Fourier-side divergence i xi1 u + i xi2 w and curl i xi2 u - i xi1 w.
SpectralField divergence(const SpectralField& u, const SpectralField& w);
SpectralField curl(const SpectralField& u, const SpectralField& w);

}  // namespace bsq
