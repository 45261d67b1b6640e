#pragma once

#include <vector>

#include "bsq/fft.hpp"
#include "bsq/multiplier.hpp"
#include "bsq/params.hpp"
#include "bsq/spectral_field.hpp"

namespace bsq {

struct Tendency {
  SpectralField db;
  SpectralField dsecond;  // d omega/dt or d Omega/dt, depending on the formulation
};

/// Right-hand sides of the nonlinear system on one lattice.
///
/// Quadratic terms are formed pointwise on the physical grid. With dealiasing
/// on, inputs are expected to satisfy the 2/3 rule and every product is
/// re-masked, which makes the products alias-free. The zero mode of each
/// tendency is set to 0: the transport terms are divergence-form and their
/// means vanish identically.
class RhsEvaluator {
 public:
  RhsEvaluator(const Lattice& lattice, const PhysParams& params, bool dealias = true);

  /// Vorticity form:
  ///   db/dt     = -N^2 Delta^-1 d_x omega - u . grad b
  ///   domega/dt = -alpha omega + d_x b - u . grad omega
  Tendency vorticity(const SpectralField& b, const SpectralField& omega);

  /// Diagonalized form in (b, Omega), with f_x = R d_x Omega, f_y = R d_y Omega,
  /// R = (-Delta)^(-1/2), L = (-Delta)^(1/2):
  ///   db/dt     = N R d_x Omega + N^-1 (f_y d_x b - f_x d_y b)
  ///   dOmega/dt = N R d_x b - alpha Omega + N^-1 (f_y d_x Omega - f_x d_y Omega)
  ///               + N^-1 [R, f_y] L d_x Omega - N^-1 [R, f_x] L d_y Omega
  /// where [R, f] g = R(f g) - f R(g).
  Tendency diagonalized(const SpectralField& b, const SpectralField& Omega);

  /// Commutator [R, f] g for physical f and spectral g, with R's zero mode
  /// taken as 0 (the means of the two commutator terms cancel in the sum).
  SpectralField commutator(std::span<const double> f, const SpectralField& g);

  /// Drops the quadratic terms (linear test hook).
  void set_linear_only(bool on) { linear_only_ = on; }
  bool linear_only() const { return linear_only_; }
  bool dealias() const { return dealias_; }

  /// max(|u|, |w|) over the grid from the most recent vorticity-form call, or
  /// the equivalent velocity for the diagonalized form.
  double last_max_velocity() const { return last_max_velocity_; }

  const Lattice& lattice() const { return lattice_; }

 private:
  void to_physical(const SpectralField& f, std::vector<double>& out);
  void product_to_spectral(const std::vector<double>& samples, SpectralField& out);
  void finish(SpectralField& tendency) const;

  Lattice lattice_;
  PhysParams params_;
  bool dealias_;
  bool linear_only_ = false;
  double last_max_velocity_ = 0.0;
  FftPlan fft_;
  Multiplier dx_, dy_, inv_lap_, riesz_inv_, lap_half_, mask_;
  Multiplier vort_lin_b_, u_op_, w_op_, rdx_, rdy_, ldx_, ldy_;
  std::vector<double> p_[8];
  std::vector<double> prod_;
  SpectralField s1_, s2_, s3_;
};

Tendency nonlinear_rhs_vorticity(const SpectralField& b, const SpectralField& omega, const PhysParams& params,
                                 bool dealias = true);
Tendency nonlinear_rhs_diagonalized(const SpectralField& b, const SpectralField& Omega, const PhysParams& params,
                                    bool dealias = true);

}  // namespace bsq
