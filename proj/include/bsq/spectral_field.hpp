#pragma once

#include <complex>
#include <span>
#include <vector>

#include "bsq/lattice.hpp"

namespace bsq {

using cplx = std::complex<double>;

/// Fourier coefficients of a real scalar field, normalized so that
/// g(x) = sum_k c_k exp(i xi_k . x). Storage is the half-spectrum layout of
/// `Lattice`.
class SpectralField {
 public:
  explicit SpectralField(const Lattice& lattice);

  const Lattice& lattice() const { return lattice_; }
  std::span<cplx> coeffs() { return coeffs_; }
  std::span<const cplx> coeffs() const { return coeffs_; }

  cplx& stored(int row, int col) { return coeffs_[lattice_.offset(row, col)]; }
  const cplx& stored(int row, int col) const { return coeffs_[lattice_.offset(row, col)]; }

  /// Coefficient at any lattice mode; negative-l modes read as conjugates.
  cplx at(ModeIndex m) const;

  /// Writes `value` at mode m and keeps the field real: the conjugate partner
  /// is written too when it is stored explicitly.
  void set(ModeIndex m, cplx value);

  /// Spatial mean, i.e. the (0, 0) coefficient.
  cplx mean() const { return coeffs_[0]; }

  void fill_zero();

  /// Restores exact Hermitian symmetry on the self-conjugate columns by
  /// averaging each entry with its partner.
  void hermitize();

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double s);

 private:
  Lattice lattice_;
  std::vector<cplx> coeffs_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField a);

/// Largest deviation from coeffs(-k,-l) = conj(coeffs(k,l)) on the stored
/// self-conjugate columns.
double hermitian_defect(const SpectralField& f);

/// Max |a - b| over all stored coefficients.
double max_abs_diff(const SpectralField& a, const SpectralField& b);
double max_abs(const SpectralField& f);

void require_same_lattice(const SpectralField& a, const SpectralField& b);

}  // namespace bsq
