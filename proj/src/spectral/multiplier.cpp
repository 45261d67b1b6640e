#include "bsq/multiplier.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "bsq/errors.hpp"
#include "bsq/simd/kernels.hpp"

namespace bsq {

Multiplier Multiplier::from_symbol(const Lattice& lat, const Symbol& symbol, bool singular) {
  std::vector<cplx> table(lat.spectral_size());
  for (int row = 0; row < lat.rows(); ++row) {
    for (int col = 0; col < lat.cols(); ++col) {
      const Vec2 xi = lat.xi_at(row, col);
      cplx m;
      if (singular && row == 0 && col == 0) {
        m = 0.0;
      } else {
        // Average over alias representatives on the Nyquist lines.
        const bool nr = lat.is_nyquist_row(row);
        const bool nc = lat.is_nyquist_col(col);
        if (!nr && !nc) {
          m = symbol(xi);
        } else if (nr && !nc) {
          m = 0.5 * (symbol(xi) + symbol({-xi.x, xi.y}));
        } else if (!nr && nc) {
          m = 0.5 * (symbol(xi) + symbol({xi.x, -xi.y}));
        } else {
          m = 0.25 * (symbol(xi) + symbol({-xi.x, xi.y}) + symbol({xi.x, -xi.y}) + symbol({-xi.x, -xi.y}));
        }
      }
      table[lat.offset(row, col)] = m;
    }
  }
  return Multiplier(lat, std::move(table), singular);
}

Multiplier Multiplier::identity(const Lattice& lat) {
  return Multiplier(lat, std::vector<cplx>(lat.spectral_size(), cplx(1.0, 0.0)), false);
}

Multiplier Multiplier::dx(const Lattice& lat) {
  return from_symbol(lat, [](Vec2 xi) { return cplx(0.0, xi.x); }, false);
}

Multiplier Multiplier::dy(const Lattice& lat) {
  return from_symbol(lat, [](Vec2 xi) { return cplx(0.0, xi.y); }, false);
}

Multiplier Multiplier::frac_laplacian(const Lattice& lat, double s) {
  if (s == 0.0) return identity(lat);
  return from_symbol(lat, [s](Vec2 xi) { return cplx(std::pow(norm(xi), s), 0.0); }, s < 0.0);
}

Multiplier Multiplier::inverse_laplacian(const Lattice& lat) {
  return from_symbol(
      lat, [](Vec2 xi) { return cplx(-1.0 / (xi.x * xi.x + xi.y * xi.y), 0.0); }, true);
}

Multiplier Multiplier::riesz(const Lattice& lat) {
  return from_symbol(lat, [](Vec2 xi) { return cplx(0.0, xi.x / norm(xi)); }, true);
}

bool dealias_keeps(const Lattice& lat, ModeIndex m) {
  return 3 * std::abs(m.k) < lat.nx() && 3 * std::abs(m.l) < lat.ny();
}

Multiplier Multiplier::dealias_mask(const Lattice& lat) {
  std::vector<cplx> table(lat.spectral_size());
  for (int row = 0; row < lat.rows(); ++row) {
    for (int col = 0; col < lat.cols(); ++col) {
      const bool keep = dealias_keeps(lat, {lat.k_of_row(row), lat.l_of_col(col)});
      table[lat.offset(row, col)] = keep ? 1.0 : 0.0;
    }
  }
  return Multiplier(lat, std::move(table), false);
}

Multiplier Multiplier::operator*(const Multiplier& other) const {
  if (!(lattice_ == other.lattice_)) throw LatticeMismatchError("multipliers on different lattices");
  std::vector<cplx> table(table_.size());
  kernels::cmul(table, table_, other.table_);
  return Multiplier(lattice_, std::move(table), singular_ || other.singular_);
}

Multiplier Multiplier::operator*(double s) const {
  std::vector<cplx> table(table_);
  for (auto& c : table) c *= s;
  return Multiplier(lattice_, std::move(table), singular_);
}

void Multiplier::check_gauge(const SpectralField& field) const {
  if (!(field.lattice() == lattice_)) throw LatticeMismatchError("field and multiplier lattices differ");
  if (singular_ && std::abs(field.mean()) > kGaugeTolerance) {
    std::ostringstream msg;
    msg << "singular multiplier applied to field with mean " << std::abs(field.mean());
    throw GaugeError(msg.str());
  }
}

SpectralField Multiplier::apply(const SpectralField& field) const {
  SpectralField out(lattice_);
  apply_into(field, out);
  return out;
}

void Multiplier::apply_in_place(SpectralField& field) const {
  check_gauge(field);
  kernels::cmul_inplace(field.coeffs(), table_);
}

void Multiplier::apply_into(const SpectralField& field, SpectralField& out) const {
  check_gauge(field);
  if (!(out.lattice() == lattice_)) throw LatticeMismatchError("output lattice differs");
  kernels::cmul(out.coeffs(), field.coeffs(), table_);
}

SpectralField apply_multiplier(const SpectralField& field, const Multiplier& m) { return m.apply(field); }

SpectralField apply_multiplier(const SpectralField& field, const Symbol& symbol, bool singular) {
  return Multiplier::from_symbol(field.lattice(), symbol, singular).apply(field);
}

}  // namespace bsq
