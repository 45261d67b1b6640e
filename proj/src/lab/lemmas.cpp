#include "bsq/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bsq/errors.hpp"
#include "bsq/fft.hpp"
#include "bsq/simd/kernels.hpp"
#include "bsq/sobolev.hpp"

namespace bsq {
namespace {

using boost::math::quadrature::gauss_kronrod;

struct PanelSum {
  double value = 0.0;
  double error = 0.0;
};

template <class F>
void add_panel(PanelSum& acc, F&& f, double a, double b) {
  if (!(b > a)) return;
  double err = 0.0;
  acc.value += gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-12, &err);
  acc.error += err;
}

}  // namespace

double angular_integral(int k, double t) {
  if (k < 0) throw RangeError("angular_integral: k must be >= 0");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("angular_integral: t must be >= 0");

  // Four quarter periods of |cos|^k exp(-t cos^2), written about the peak at
  // phi = pi/2 - theta where cos(theta) = sin(phi) has no cancellation. For
  // t > 1 the variable u = sqrt(t) phi and the factor t^(k/2) keep the
  // integrand of order one, so the error estimates stay meaningful.
  const double kd = static_cast<double>(k);
  const double half_pi = 0.5 * std::numbers::pi;
  const double scale = t > 1.0 ? std::sqrt(t) : 1.0;
  auto f = [=](double u) {
    const double s = scale * std::sin(u / scale);
    return (k == 0 ? 1.0 : std::pow(s, kd)) * std::exp(-(t / (scale * scale)) * s * s);
  };
  const double u_end = half_pi * scale;
  PanelSum acc;
  double lo = 0.0;
  double hi = std::min(u_end, 1.0);
  while (lo < u_end) {
    add_panel(acc, f, lo, hi);
    lo = hi;
    hi = std::min(u_end, 2.0 * hi);
  }
  const double factor = std::pow(scale, -(kd + 1.0));
  acc.value *= factor;
  acc.error *= factor;
  const double value = 4.0 * acc.value;
  if (!(4.0 * acc.error <= 1e-10 * std::abs(value))) {
    std::ostringstream msg;
    msg << "angular_integral(k=" << k << ", t=" << t << "): error estimate " << 4.0 * acc.error
        << " above 1e-10 relative";
    throw AccuracyError(msg.str());
  }
  return value;
}

double angular_limit_constant(int k) {
  if (k < 0) throw RangeError("angular_limit_constant: k must be >= 0");
  return 2.0 * std::tgamma(0.5 * (k + 1));
}

double bhn_phi(double gamma, double kappa) { return std::min({gamma, kappa, gamma + kappa - 1.0}); }

double bhn_integral(double gamma, double kappa, double t) {
  if (!(gamma >= 0.0 && gamma < 1.0) || !(kappa >= 0.0 && kappa < 1.0)) {
    throw RangeError("bhn_integral: gamma and kappa must lie in [0, 1)");
  }
  if (!(t >= 2.0) || !std::isfinite(t)) throw DomainError("bhn_integral: t must be >= 2");

  // The mins are 1 exactly on tau <= 1 (kappa factor) and t - tau <= 1 (gamma
  // factor). On the middle stretch each power is integrated on dyadic panels
  // measured from its own singular end.
  auto mid = [=](double tau) { return std::pow(t - tau, -gamma) * std::pow(tau, -kappa); };
  auto head = [=](double tau) { return std::pow(t - tau, -gamma); };
  auto tail = [=](double tau) { return std::pow(tau, -kappa); };

  PanelSum acc;
  add_panel(acc, head, 0.0, 1.0);
  const double half = 0.5 * t;
  for (double a = 1.0; a < half; a *= 2.0) add_panel(acc, mid, a, std::min(2.0 * a, half));
  for (double a = 1.0; a < half; a *= 2.0) add_panel(acc, mid, t - std::min(2.0 * a, half), t - a);
  add_panel(acc, tail, t - 1.0, t);

  if (!(acc.error <= 1e-8 * std::abs(acc.value))) {
    std::ostringstream msg;
    msg << "bhn_integral(" << gamma << ", " << kappa << ", " << t << "): error estimate " << acc.error;
    throw AccuracyError(msg.str());
  }
  return acc.value;
}

double interpolation_ratio(const SpectralField& field, double s0, double s, double s1, bool homogeneous) {
  if (!(s0 <= s && s <= s1)) throw RangeError("interpolation_ratio needs s0 <= s <= s1");
  const double theta = s1 > s0 ? (s1 - s) / (s1 - s0) : 1.0;
  const double n = sobolev_norm(field, s, homogeneous);
  const double n0 = sobolev_norm(field, s0, homogeneous);
  const double n1 = sobolev_norm(field, s1, homogeneous);
  const double den = std::pow(n0, theta) * std::pow(n1, 1.0 - theta);
  if (!(den > 0.0)) throw UndefinedRatioError("interpolation_ratio: denominator vanishes");
  return n / den;
}

double embedding_defect(const SpectralField& field, double r) {
  if (!(r >= 0.0)) throw RangeError("embedding_defect needs r >= 0");
  const double hr = sobolev_norm(field, r, false);
  const double hm1 = sobolev_norm(field, -1.0, true);
  const double hdr = sobolev_norm(field, r, true);
  const double den = std::pow(2.0, r) * (hm1 * hm1 + hdr * hdr);
  if (!(den > 0.0)) throw UndefinedRatioError("embedding_defect: zero field");
  return hr * hr / den;
}

double fourier_decay_envelope(const AnalyticProfile& profile, double m) {
  if (!(m > 0.0)) throw RangeError("fourier_decay_envelope needs m > 0");
  profile.validate();
  auto env = [&](double rho) {
    const double g = std::abs(profile.radial(rho));
    return g == 0.0 ? 0.0 : g * (1.0 + std::pow(rho, m));
  };
  constexpr int per_octave = 64;
  constexpr int lo_octave = -20;
  constexpr int hi_octave = 60;
  double sup = env(0.0);
  for (int i = lo_octave * per_octave; i <= hi_octave * per_octave; ++i) {
    sup = std::max(sup, env(std::exp2(static_cast<double>(i) / per_octave)));
  }
  // A bounded envelope flattens or decays over the last octave; a power-law
  // growth rho^(m - p) shows up as a ratio of 2^(m - p) > 1.
  const double last = env(std::exp2(hi_octave));
  const double prev = env(std::exp2(hi_octave - 1));
  if (!std::isfinite(sup) || (prev > 0.0 && last / prev > 1.0 + 1e-6)) {
    std::ostringstream msg;
    msg << "fourier_decay_envelope: |g(xi)| (1 + |xi|^" << m << ") grows without bound";
    throw EnvelopeError(msg.str());
  }
  return sup;
}

namespace {

// Copy of f on a lattice twice as fine in each direction. The source Nyquist
// row and column are dropped since they have no unique signed index.
SpectralField pad(const SpectralField& f, const Lattice& fine) {
  const Lattice& lat = f.lattice();
  SpectralField out(fine);
  for (int row = 0; row < lat.rows(); ++row) {
    if (lat.is_nyquist_row(row)) continue;
    for (int col = 0; col < lat.cols(); ++col) {
      if (lat.is_nyquist_col(col)) continue;
      out.stored(fine.row_of_k(lat.k_of_row(row)), col) = f.stored(row, col);
    }
  }
  return out;
}

}  // namespace

double bilinear_ratio(const SpectralField& f, const SpectralField& g, double s) {
  if (!(s > 0.0)) throw RangeError("bilinear_ratio needs s > 0");
  require_same_lattice(f, g);
  const Lattice& lat = f.lattice();
  const Lattice fine(2 * lat.nx(), 2 * lat.ny(), lat.lx(), lat.ly());
  FftPlan fft(fine);
  std::vector<double> pf(fine.physical_size()), pg(fine.physical_size()), prod(fine.physical_size());
  fft.to_physical(pad(f, fine), pf);
  fft.to_physical(pad(g, fine), pg);
  kernels::mul(prod, pf, pg);
  SpectralField fg(fine);
  fft.to_spectral(prod, fg);

  const double num = sobolev_norm(fg, s, true);
  const double den = kernels::max_abs(pf) * sobolev_norm(g, s, true) + sobolev_norm(f, s, true) * kernels::max_abs(pg);
  if (!(den > 0.0)) throw UndefinedRatioError("bilinear_ratio: denominator vanishes");
  return num / den;
}

}  // namespace bsq
