#include "bsq/spectral_field.hpp"

#include <algorithm>
#include <cmath>

#include "bsq/errors.hpp"

namespace bsq {
namespace {

// (-k) folded back into [-n/2, n/2).
int wrap_neg(int k, int n) {
  int r = -k;
  if (r >= n / 2) r -= n;
  return r;
}

}  // namespace

SpectralField::SpectralField(const Lattice& lattice)
    : lattice_(lattice), coeffs_(lattice.spectral_size(), cplx(0.0, 0.0)) {}

cplx SpectralField::at(ModeIndex m) const {
  if (!lattice_.contains(m)) throw RangeError("mode outside lattice");
  const int ny = lattice_.ny();
  if (m.l == -ny / 2) return stored(lattice_.row_of_k(m.k), ny / 2);
  if (m.l >= 0) return stored(lattice_.row_of_k(m.k), m.l);
  return std::conj(stored(lattice_.row_of_k(wrap_neg(m.k, lattice_.nx())), -m.l));
}

void SpectralField::set(ModeIndex m, cplx value) {
  if (!lattice_.contains(m)) throw RangeError("mode outside lattice");
  const int nx = lattice_.nx();
  const int ny = lattice_.ny();
  if (m.l < 0 && m.l != -ny / 2) {
    stored(lattice_.row_of_k(wrap_neg(m.k, nx)), -m.l) = std::conj(value);
    return;
  }
  const int col = (m.l == -ny / 2) ? ny / 2 : m.l;
  const int row = lattice_.row_of_k(m.k);
  if (col != 0 && col != ny / 2) {
    stored(row, col) = value;
    return;
  }
  const int partner = lattice_.row_of_k(wrap_neg(m.k, nx));
  if (partner == row) {
    stored(row, col) = cplx(value.real(), 0.0);
  } else {
    stored(row, col) = value;
    stored(partner, col) = std::conj(value);
  }
}

void SpectralField::fill_zero() { std::fill(coeffs_.begin(), coeffs_.end(), cplx(0.0, 0.0)); }

void SpectralField::hermitize() {
  const int nx = lattice_.nx();
  for (int col : {0, lattice_.ny() / 2}) {
    for (int row = 0; row < nx; ++row) {
      const int partner = lattice_.row_of_k(wrap_neg(lattice_.k_of_row(row), nx));
      if (partner == row) {
        stored(row, col) = cplx(stored(row, col).real(), 0.0);
      } else if (partner > row) {
        const cplx avg = 0.5 * (stored(row, col) + std::conj(stored(partner, col)));
        stored(row, col) = avg;
        stored(partner, col) = std::conj(avg);
      }
    }
  }
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_lattice(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_lattice(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double s, SpectralField a) { return a *= s; }

double hermitian_defect(const SpectralField& f) {
  const Lattice& lat = f.lattice();
  double defect = 0.0;
  for (int col : {0, lat.ny() / 2}) {
    for (int row = 0; row < lat.nx(); ++row) {
      const int partner = lat.row_of_k(wrap_neg(lat.k_of_row(row), lat.nx()));
      defect = std::max(defect, std::abs(f.stored(row, col) - std::conj(f.stored(partner, col))));
    }
  }
  return defect;
}

double max_abs_diff(const SpectralField& a, const SpectralField& b) {
  require_same_lattice(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) m = std::max(m, std::abs(a.coeffs()[i] - b.coeffs()[i]));
  return m;
}

double max_abs(const SpectralField& f) {
  double m = 0.0;
  for (const auto& c : f.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

void require_same_lattice(const SpectralField& a, const SpectralField& b) {
  if (!(a.lattice() == b.lattice())) throw LatticeMismatchError("fields live on different lattices");
}

}  // namespace bsq
