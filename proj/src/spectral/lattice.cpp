#include "bsq/lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bsq/errors.hpp"

namespace bsq {

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

Lattice::Lattice(int nx, int ny, double lx, double ly) : nx_(nx), ny_(ny), lx_(lx), ly_(ly) {
  if (nx < 8 || ny < 8 || nx % 2 != 0 || ny % 2 != 0) {
    throw RangeError("lattice mode counts must be even and >= 8, got " + std::to_string(nx) + "x" +
                     std::to_string(ny));
  }
  if (!(lx > 0.0) || !(ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly)) {
    throw RangeError("lattice lengths must be positive");
  }
}

Vec2 Lattice::xi_at(int row, int col) const {
  const double two_pi = 2.0 * std::numbers::pi;
  return {two_pi * k_of_row(row) / lx_, two_pi * l_of_col(col) / ly_};
}

Vec2 wavenumber(const Lattice& lattice, ModeIndex index) {
  if (!lattice.contains(index)) {
    throw RangeError("mode (" + std::to_string(index.k) + ", " + std::to_string(index.l) +
                     ") outside lattice");
  }
  const double two_pi = 2.0 * std::numbers::pi;
  return {two_pi * index.k / lattice.lx(), two_pi * index.l / lattice.ly()};
}

double riesz_ratio(Vec2 xi) {
  const double r = norm(xi);
  if (r == 0.0) return 0.0;
  const double mu = xi.x / r;
  return std::fmax(-1.0, std::fmin(1.0, mu));
}

}  // namespace bsq
