#include "bsq/expansion.hpp"

#include <cmath>
#include <string>

#include "bsq/errors.hpp"

namespace bsq {

bool in_slow_regime(const PhysParams& params, double mu) {
  return params.alpha > 0.0 && std::abs(mu) < params.alpha / (2.0 * params.bruntN);
}

namespace {
void require_slow(const PhysParams& params, double mu) {
  if (!in_slow_regime(params, mu)) {
    throw RegimeError("|mu| = " + std::to_string(std::abs(mu)) + " is outside the slow regime |mu| < alpha/(2N)");
  }
}
}  // namespace

EigenPair eigen_expansion_slow(const PhysParams& params, double mu) {
  require_slow(params, mu);
  const double a = params.alpha;
  const double q = params.bruntN * params.bruntN * mu * mu / a;
  return {a - q, q};
}

Mat2 projector_expansion(const PhysParams& params, double mu, int order) {
  require_slow(params, mu);
  if (order < 0 || order > 2) throw RangeError("projector expansion order must be 0, 1 or 2");
  const double r = params.bruntN / params.alpha;
  Mat2 p = Mat2::diag(1.0, 0.0);
  if (order >= 1) {
    const cplx z(0.0, mu);
    p += z * Mat2{0.0, r, r, 0.0};
  }
  if (order >= 2) {
    const double z2 = -mu * mu;  // (i mu)^2
    p += cplx(z2) * Mat2::diag(-r * r, r * r);
  }
  return p;
}

Mat2 kernel_slow(const PhysParams& params, double theta, double t) {
  const double c = std::cos(theta);
  require_slow(params, c);
  if (!(t >= 0.0)) throw DomainError("kernel time must be >= 0");
  const double a = params.alpha;
  const double n = params.bruntN;
  const Mat2 slow = projector_expansion(params, c, 2);
  const double rc2 = n * n * c * c / (a * a);
  const cplx off(0.0, -n * c / a);
  const Mat2 complement{-rc2, off, off, rc2};
  return std::exp(-(n * n / a) * c * c * t) * slow + std::exp(-0.5 * a * t) * complement;
}

}  // namespace bsq
