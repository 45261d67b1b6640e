#include "bsq/propagator.hpp"

#include <cmath>
#include <string>

#include "bsq/errors.hpp"

namespace bsq {
namespace {

void check_mu(double mu) {
  if (!(std::abs(mu) <= 1.0 + 1e-12)) throw RangeError("|mu| must be <= 1, got " + std::to_string(mu));
}

}  // namespace

Mat2 mode_generator(const PhysParams& params, double mu) {
  const cplx off(0.0, -params.bruntN * mu);
  return {0.0, off, off, params.alpha};
}

double discriminant(const PhysParams& params, double mu) {
  const double a = params.alpha;
  const double nm = params.bruntN * mu;
  return a * a - 4.0 * nm * nm;
}

double degeneracy_tolerance(const PhysParams& params) { return 1e-9 * params.alpha * params.alpha; }

EigenPair eigenvalues(const PhysParams& params, double mu) {
  const double a = params.alpha;
  const double disc = discriminant(params, mu);
  if (disc > 0.0) {
    // Real roots: take the large one directly and the small one from the product
    // lambda+ lambda- = N^2 mu^2, which avoids cancellation for small mu.
    const double plus = 0.5 * (a + std::sqrt(disc));
    const double nm = params.bruntN * mu;
    return {plus, nm * nm / plus};
  }
  const double im = 0.5 * std::sqrt(-disc);
  return {cplx(0.5 * a, im), cplx(0.5 * a, -im)};
}

EigenData eigen_data(const PhysParams& params, double mu) {
  const EigenPair ev = eigenvalues(params, mu);
  EigenData d{ev.plus, ev.minus, {}, {}, false};
  const double disc = discriminant(params, mu);
  if (std::abs(disc) <= degeneracy_tolerance(params)) {
    d.degenerate = true;
    return d;
  }
  const Mat2 e = mode_generator(params, mu);
  // lambda+ - lambda- = sqrt(disc), principal branch.
  const cplx gap = std::sqrt(cplx(disc, 0.0));
  d.proj_plus = (1.0 / gap) * (e - ev.minus * Mat2::identity());
  d.proj_minus = (-1.0 / gap) * (e - ev.plus * Mat2::identity());
  return d;
}

Mat2 exact_mode_propagator(const PhysParams& params, double mu, double t) {
  if (!(t >= 0.0)) throw DomainError("propagator time must be >= 0");
  check_mu(mu);
  if (t == 0.0) return Mat2::identity();
  const EigenData d = eigen_data(params, mu);
  if (d.degenerate) {
    const double lambda = 0.5 * params.alpha;
    const Mat2 nil = mode_generator(params, mu) - cplx(lambda) * Mat2::identity();
    return std::exp(-lambda * t) * (Mat2::identity() - cplx(t) * nil);
  }
  return std::exp(-d.lambda_minus * t) * d.proj_minus + std::exp(-d.lambda_plus * t) * d.proj_plus;
}

}  // namespace bsq
