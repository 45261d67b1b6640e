#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bsq {

/// Time-stamped samples of one norm.
struct NormSeries {
  std::string label;
  std::vector<double> times;
  std::vector<double> values;

  /// Appends a sample; times must increase strictly and values be finite and >= 0.
  void push(double t, double value);
  std::size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }
};

/// Least-squares line log(value) = intercept + exponent * log(t) over a window.
struct DecayFit {
  std::string label;
  double exponent = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  std::size_t samples = 0;
};

/// Geometric sample times from t_min to t_max inclusive, `per_decade` points
/// per factor of ten.
std::vector<double> geometric_times(double t_min, double t_max, int per_decade);

}  // namespace bsq
