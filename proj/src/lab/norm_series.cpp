#include "bsq/norm_series.hpp"

#include <algorithm>
#include <cmath>

#include "bsq/errors.hpp"

namespace bsq {

void NormSeries::push(double t, double value) {
  if (!times.empty() && !(t > times.back())) {
    throw RangeError("series '" + label + "': sample times must increase strictly");
  }
  if (!std::isfinite(value) || value < 0.0) {
    throw RangeError("series '" + label + "': values must be finite and non-negative");
  }
  times.push_back(t);
  values.push_back(value);
}

std::vector<double> geometric_times(double t_min, double t_max, int per_decade) {
  if (!(t_min > 0.0) || !(t_max >= t_min) || per_decade < 1) {
    throw RangeError("geometric_times needs 0 < t_min <= t_max and per_decade >= 1");
  }
  const double decades = std::log10(t_max / t_min);
  const long n = std::lround(std::ceil(decades * per_decade - 1e-9));
  std::vector<double> out;
  out.reserve(n + 1);
  for (long i = 0; i <= n; ++i) {
    // Powers of ten from the exponent rather than repeated products, so that the
    // decade points come out exact.
    const double t = t_min * std::pow(10.0, static_cast<double>(i) / per_decade);
    out.push_back(std::min(t, t_max));
  }
  if (out.back() < t_max) out.push_back(t_max);
  if (out.size() >= 2 && out[out.size() - 2] >= out.back()) out.erase(out.end() - 2);
  return out;
}

}  // namespace bsq
