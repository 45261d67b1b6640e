#pragma once

#include "bsq/norm_series.hpp"

namespace bsq {

inline constexpr std::size_t kMinFitSamples = 8;

/// Fits a power law to the samples of `series` with t in [t_min, t_max].
/// Throws FitError with fewer than kMinFitSamples samples in the window or any
/// non-positive value there. A constant series has R^2 = 1 by convention.
DecayFit fit_decay(const NormSeries& series, double t_min, double t_max);

}  // namespace bsq
