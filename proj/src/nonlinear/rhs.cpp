#include "bsq/rhs.hpp"

#include <cmath>

#include "bsq/simd/kernels.hpp"

namespace bsq {

RhsEvaluator::RhsEvaluator(const Lattice& lattice, const PhysParams& params, bool dealias)
    : lattice_(lattice),
      params_(params),
      dealias_(dealias),
      fft_(lattice),
      dx_(Multiplier::dx(lattice)),
      dy_(Multiplier::dy(lattice)),
      inv_lap_(Multiplier::inverse_laplacian(lattice)),
      riesz_inv_(Multiplier::frac_laplacian(lattice, -1.0)),
      lap_half_(Multiplier::frac_laplacian(lattice, 1.0)),
      mask_(Multiplier::dealias_mask(lattice)),
      vort_lin_b_(inv_lap_ * dx_ * (-params.bruntN * params.bruntN)),
      u_op_(dy_ * inv_lap_),
      w_op_(dx_ * inv_lap_ * -1.0),
      rdx_(riesz_inv_ * dx_),
      rdy_(riesz_inv_ * dy_),
      ldx_(lap_half_ * dx_),
      ldy_(lap_half_ * dy_),
      s1_(lattice),
      s2_(lattice),
      s3_(lattice) {
  params_.validate();
  for (auto& p : p_) p.resize(lattice.physical_size());
  prod_.resize(lattice.physical_size());
}

void RhsEvaluator::to_physical(const SpectralField& f, std::vector<double>& out) { fft_.to_physical(f, out); }

void RhsEvaluator::product_to_spectral(const std::vector<double>& samples, SpectralField& out) {
  fft_.to_spectral(samples, out);
  if (dealias_) mask_.apply_in_place(out);
}

void RhsEvaluator::finish(SpectralField& tendency) const {
  if (dealias_) mask_.apply_in_place(tendency);
  tendency.stored(0, 0) = 0.0;
}

Tendency RhsEvaluator::vorticity(const SpectralField& b, const SpectralField& omega) {
  Tendency out{SpectralField(lattice_), SpectralField(lattice_)};

  // Linear parts: -N^2 Delta^-1 d_x omega and -alpha omega + d_x b.
  vort_lin_b_.apply_into(omega, out.db);
  dx_.apply_into(b, out.dsecond);
  kernels::axpy(out.dsecond.coeffs(), out.dsecond.coeffs(), -params_.alpha, omega.coeffs());

  if (linear_only_) {
    last_max_velocity_ = 0.0;
  } else {
    // phi = Delta^-1 omega, u = d_y phi, w = -d_x phi.
    u_op_.apply_into(omega, s1_);
    to_physical(s1_, p_[0]);
    w_op_.apply_into(omega, s1_);
    to_physical(s1_, p_[1]);
    last_max_velocity_ = std::fmax(kernels::max_abs(p_[0]), kernels::max_abs(p_[1]));

    dx_.apply_into(b, s1_);
    to_physical(s1_, p_[2]);
    dy_.apply_into(b, s1_);
    to_physical(s1_, p_[3]);
    dx_.apply_into(omega, s1_);
    to_physical(s1_, p_[4]);
    dy_.apply_into(omega, s1_);
    to_physical(s1_, p_[5]);

    kernels::mul_add2(prod_, p_[0], p_[2], p_[1], p_[3]);
    product_to_spectral(prod_, s1_);
    out.db -= s1_;
    kernels::mul_add2(prod_, p_[0], p_[4], p_[1], p_[5]);
    product_to_spectral(prod_, s1_);
    out.dsecond -= s1_;
  }
  finish(out.db);
  finish(out.dsecond);
  return out;
}

SpectralField RhsEvaluator::commutator(std::span<const double> f, const SpectralField& g) {
  SpectralField out(lattice_);
  std::vector<double>& gp = p_[6];
  std::vector<double>& mgp = p_[7];
  std::vector<double> prod(lattice_.physical_size());

  // R(f g), with the zero mode of R taken as 0.
  to_physical(g, gp);
  kernels::mul(prod, f, gp);
  product_to_spectral(prod, out);
  out.stored(0, 0) = 0.0;
  riesz_inv_.apply_in_place(out);

  // f R(g)
  riesz_inv_.apply_into(g, s3_);
  to_physical(s3_, mgp);
  kernels::mul(prod, f, mgp);
  product_to_spectral(prod, s3_);
  out -= s3_;
  return out;
}

Tendency RhsEvaluator::diagonalized(const SpectralField& b, const SpectralField& Omega) {
  const double n = params_.bruntN;
  Tendency out{SpectralField(lattice_), SpectralField(lattice_)};

  // Linear parts: N R d_x Omega and N R d_x b - alpha Omega.
  (rdx_ * n).apply_into(Omega, out.db);
  (rdx_ * n).apply_into(b, out.dsecond);
  kernels::axpy(out.dsecond.coeffs(), out.dsecond.coeffs(), -params_.alpha, Omega.coeffs());

  if (linear_only_) {
    last_max_velocity_ = 0.0;
  } else {
    auto& fy = p_[0];
    auto& fx = p_[1];
    rdy_.apply_into(Omega, s1_);
    to_physical(s1_, fy);
    rdx_.apply_into(Omega, s1_);
    to_physical(s1_, fx);
    // u = (-f_y, f_x) / N
    last_max_velocity_ = std::fmax(kernels::max_abs(fy), kernels::max_abs(fx)) / n;

    std::vector<double> neg_fx(fx.size());
    for (std::size_t i = 0; i < fx.size(); ++i) neg_fx[i] = -fx[i];

    dx_.apply_into(b, s1_);
    to_physical(s1_, p_[2]);
    dy_.apply_into(b, s1_);
    to_physical(s1_, p_[3]);
    dx_.apply_into(Omega, s1_);
    to_physical(s1_, p_[4]);
    dy_.apply_into(Omega, s1_);
    to_physical(s1_, p_[5]);

    // N^-1 (f_y d_x b - f_x d_y b)
    kernels::mul_add2(prod_, fy, p_[2], neg_fx, p_[3]);
    product_to_spectral(prod_, s1_);
    s1_ *= 1.0 / n;
    out.db += s1_;

    // N^-1 (f_y d_x Omega - f_x d_y Omega)
    kernels::mul_add2(prod_, fy, p_[4], neg_fx, p_[5]);
    product_to_spectral(prod_, s1_);
    s1_ *= 1.0 / n;
    out.dsecond += s1_;

    // N^-1 [R, f_y] L d_x Omega - N^-1 [R, f_x] L d_y Omega
    const SpectralField ldx = ldx_.apply(Omega);
    const SpectralField ldy = ldy_.apply(Omega);
    SpectralField c1 = commutator(fy, ldx);
    SpectralField c2 = commutator(fx, ldy);
    c1 -= c2;
    c1 *= 1.0 / n;
    out.dsecond += c1;
  }
  finish(out.db);
  finish(out.dsecond);
  return out;
}

Tendency nonlinear_rhs_vorticity(const SpectralField& b, const SpectralField& omega, const PhysParams& params,
                                 bool dealias) {
  RhsEvaluator rhs(b.lattice(), params, dealias);
  return rhs.vorticity(b, omega);
}

Tendency nonlinear_rhs_diagonalized(const SpectralField& b, const SpectralField& Omega, const PhysParams& params,
                                    bool dealias) {
  RhsEvaluator rhs(b.lattice(), params, dealias);
  return rhs.diagonalized(b, Omega);
}

}  // namespace bsq
