#include "bsq/fit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bsq/errors.hpp"

namespace bsq {

DecayFit fit_decay(const NormSeries& series, double t_min, double t_max) {
  std::vector<double> x, y;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double t = series.times[i];
    if (t < t_min || t > t_max) continue;
    const double v = series.values[i];
    if (!(v > 0.0) || !(t > 0.0)) {
      std::ostringstream msg;
      msg << "fit '" << series.label << "': non-positive sample at t=" << t;
      throw FitError(msg.str());
    }
    x.push_back(std::log(t));
    y.push_back(std::log(v));
  }
  if (x.size() < kMinFitSamples) {
    std::ostringstream msg;
    msg << "fit '" << series.label << "': " << x.size() << " samples in [" << t_min << ", " << t_max
        << "], need " << kMinFitSamples;
    throw FitError(msg.str());
  }

  // Values are taken relative to the first sample so that a constant series
  // gives exactly zero slope and residual.
  const double y0 = y.front();
  for (double& v : y) v -= y0;
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw FitError("fit '" + series.label + "': window has no spread in t");

  DecayFit fit;
  fit.label = series.label;
  fit.exponent = sxy / sxx;
  fit.intercept = y0 + my - fit.exponent * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (my + fit.exponent * (x[i] - mx));
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  fit.t_min = t_min;
  fit.t_max = t_max;
  fit.samples = x.size();
  return fit;
}

}  // namespace bsq
