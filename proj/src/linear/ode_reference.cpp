#include "bsq/ode_reference.hpp"

#include <cmath>

#include "bsq/errors.hpp"
#include "bsq/propagator.hpp"

namespace bsq {
namespace {

// One RK4 step of y' = A y as a matrix: I + hA + (hA)^2/2 + (hA)^3/6 + (hA)^4/24.
Mat2 rk4_step_matrix(const Mat2& a, double h) {
  const Mat2 ha = cplx(h) * a;
  Mat2 term = Mat2::identity();
  Mat2 sum = Mat2::identity();
  for (int j = 1; j <= 4; ++j) {
    term = cplx(1.0 / j) * (ha * term);
    sum += term;
  }
  return sum;
}

Mat2 power(Mat2 m, long n) {
  Mat2 out = Mat2::identity();
  while (n > 0) {
    if (n & 1) out = out * m;
    m = m * m;
    n >>= 1;
  }
  return out;
}

Mat2 rk4_solve(const Mat2& a, double t, double dt) {
  const long n = static_cast<long>(std::floor(t / dt * (1.0 + 1e-12)));
  const double rest = t - static_cast<double>(n) * dt;
  Mat2 g = power(rk4_step_matrix(a, dt), n);
  if (rest > 1e-15 * std::max(1.0, t)) g = rk4_step_matrix(a, rest) * g;
  return g;
}

}  // namespace

Mat2 rk4_reference_propagator(const PhysParams& params, double mu, double t, double dt) {
  if (!(t >= 0.0)) throw DomainError("rk4_reference_propagator: t must be >= 0");
  if (!(dt > 0.0)) throw RangeError("rk4_reference_propagator: dt must be > 0");
  const Mat2 a = cplx(-1.0) * mode_generator(params, mu);
  const Mat2 coarse = rk4_solve(a, t, dt);
  const Mat2 fine = rk4_solve(a, t, 0.5 * dt);
  return cplx(1.0 / 15.0) * (cplx(16.0) * fine - coarse);
}

}  // namespace bsq
