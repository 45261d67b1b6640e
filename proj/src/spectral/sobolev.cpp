#include "bsq/sobolev.hpp"

#include <cmath>
#include <vector>

#include "bsq/errors.hpp"
#include "bsq/multiplier.hpp"
#include "bsq/simd/kernels.hpp"

namespace bsq {

double sobolev_norm(const SpectralField& field, double s, bool homogeneous, DerivWeight deriv) {
  const Lattice& lat = field.lattice();
  if (homogeneous && s < 0.0 && std::abs(field.mean()) > kGaugeTolerance) {
    throw GaugeError("negative-order homogeneous norm of a field with nonzero mean");
  }
  std::vector<double> weight(lat.spectral_size());
  for (int row = 0; row < lat.rows(); ++row) {
    for (int col = 0; col < lat.cols(); ++col) {
      const Vec2 xi = lat.xi_at(row, col);
      const double r2 = xi.x * xi.x + xi.y * xi.y;
      double w;
      if (homogeneous) {
        if (r2 == 0.0) {
          w = (s == 0.0) ? 1.0 : 0.0;
        } else {
          w = (s == 0.0) ? 1.0 : std::pow(r2, s);
        }
      } else {
        w = (s == 0.0) ? 1.0 : std::pow(1.0 + r2, s);
      }
      if (deriv == DerivWeight::dx) w *= xi.x * xi.x;
      if (deriv == DerivWeight::dy) w *= xi.y * xi.y;
      weight[lat.offset(row, col)] = w * lat.multiplicity(col);
    }
  }
  return std::sqrt(lat.area() * kernels::weighted_sq_sum(field.coeffs(), weight));
}

double grid_l2_norm(const Lattice& lat, std::span<const double> samples) {
  double sum = 0.0;
  for (double v : samples) sum += v * v;
  return std::sqrt(sum * lat.area() / static_cast<double>(lat.physical_size()));
}

}  // namespace bsq
