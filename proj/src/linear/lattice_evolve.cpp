#include "bsq/lattice_evolve.hpp"

#include "bsq/errors.hpp"
#include "bsq/propagator.hpp"

namespace bsq {

LinearPair linear_evolve_lattice(const SpectralField& b, const SpectralField& Omega, const PhysParams& params,
                                 double t) {
  require_same_lattice(b, Omega);
  if (!(t >= 0.0)) throw DomainError("evolution time must be >= 0");
  const Lattice& lat = b.lattice();
  LinearPair out{SpectralField(lat), SpectralField(lat)};
  for (int row = 0; row < lat.rows(); ++row) {
    for (int col = 0; col < lat.cols(); ++col) {
      // The sign of xi1 is ambiguous on the Nyquist row; evolving it with
      // mu = 0 keeps the map real and a semigroup.
      const double mu = lat.is_nyquist_row(row) ? 0.0 : riesz_ratio(lat.xi_at(row, col));
      const Mat2 g = exact_mode_propagator(params, mu, t);
      const auto v = g.apply(b.stored(row, col), Omega.stored(row, col));
      out.b.stored(row, col) = v[0];
      out.Omega.stored(row, col) = v[1];
    }
  }
  return out;
}

}  // namespace bsq
