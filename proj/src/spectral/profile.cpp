#include "bsq/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bsq/errors.hpp"

namespace bsq {
namespace {

// sup_{rho >= 0} rho^q exp(-rho^2 / w^2)
double gauss_moment_sup(double q, double w) {
  if (q <= 0.0) return 1.0;
  const double rho2 = 0.5 * q * w * w;
  return std::pow(rho2, 0.5 * q) * std::exp(-0.5 * q);
}

}  // namespace

AnalyticProfile AnalyticProfile::gaussian(double amplitude, double width) {
  AnalyticProfile p;
  p.kind = Kind::gaussian;
  p.amplitude = amplitude;
  p.width = width;
  return p;
}

void AnalyticProfile::validate() const {
  if (!std::isfinite(amplitude)) throw RangeError("profile amplitude must be finite");
  if (kind != Kind::algebraic && !(width > 0.0)) throw RangeError("profile width must be > 0");
  if (kind == Kind::ring_gaussian && !(radius >= 0.0)) throw RangeError("ring radius must be >= 0");
  if (kind == Kind::polynomial_gaussian && !(power >= 0.0)) throw RangeError("polynomial power must be >= 0");
  if (kind == Kind::algebraic && !(power > 0.0)) throw RangeError("algebraic power must be > 0");
}

double AnalyticProfile::radial(double rho) const {
  switch (kind) {
    case Kind::gaussian:
      return amplitude * std::exp(-rho * rho / (width * width));
    case Kind::ring_gaussian: {
      const double d = rho - radius;
      return amplitude * std::exp(-d * d / (width * width));
    }
    case Kind::polynomial_gaussian:
      return amplitude * std::pow(rho, power) * std::exp(-rho * rho / (width * width));
    case Kind::algebraic:
      return amplitude * std::pow(1.0 + rho, -power);
  }
  return 0.0;
}

double AnalyticProfile::decay_bound(double m) const {
  const double a = std::abs(amplitude);
  // (1 + rho)^m <= 2^m max(1, rho^m) for m >= 0.
  const double two_m = std::pow(2.0, std::max(m, 0.0));
  switch (kind) {
    case Kind::gaussian:
      return a * two_m * std::max(1.0, gauss_moment_sup(m, width));
    case Kind::ring_gaussian:
      // rho <= 2 max(R, |rho - R|)
      return a * two_m * std::max(1.0, std::pow(2.0, m) * std::max(std::pow(radius, m), gauss_moment_sup(m, width)));
    case Kind::polynomial_gaussian:
      return a * two_m * std::max(gauss_moment_sup(power, width), gauss_moment_sup(power + m, width));
    case Kind::algebraic:
      return m <= power ? a : std::numeric_limits<double>::infinity();
  }
  return std::numeric_limits<double>::infinity();
}

double AnalyticProfile::truncation_radius(double q, double tol) const {
  double peak = 0.0;
  switch (kind) {
    case Kind::gaussian: peak = 0.0; break;
    case Kind::ring_gaussian: peak = radius; break;
    case Kind::polynomial_gaussian: peak = width * std::sqrt(0.5 * power); break;
    case Kind::algebraic: return std::numeric_limits<double>::infinity();
  }
  const double ref = std::max(std::abs(radial(peak)), std::numeric_limits<double>::min());
  double r = peak + width;
  const double step = 0.25 * width;
  while (std::abs(radial(r)) * std::pow(1.0 + r, 0.5 * q + 1.0) > tol * ref) r += step;
  return r;
}

AnalyticProfile::Kind AnalyticProfile::parse_kind(const std::string& name) {
  if (name == "gaussian") return Kind::gaussian;
  if (name == "ring-gaussian") return Kind::ring_gaussian;
  if (name == "polynomial-gaussian") return Kind::polynomial_gaussian;
  if (name == "algebraic") return Kind::algebraic;
  throw RangeError("unknown profile kind '" + name + "'");
}

std::string AnalyticProfile::kind_name(Kind kind) {
  switch (kind) {
    case Kind::gaussian: return "gaussian";
    case Kind::ring_gaussian: return "ring-gaussian";
    case Kind::polynomial_gaussian: return "polynomial-gaussian";
    case Kind::algebraic: return "algebraic";
  }
  return "?";
}

}  // namespace bsq
