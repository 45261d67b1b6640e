#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "bsq/experiments.hpp"

namespace bsq {

/// series.csv body: header `t,label,value`, one row per sample, series in
/// the given order, numbers printed with 17 significant digits.
std::string series_csv(const std::vector<NormSeries>& series);

/// fits.csv body: header `label,exponent,intercept,r_squared,t_min,t_max`.
std::string fits_csv(const std::vector<DecayFit>& fits);

nlohmann::ordered_json checks_json(const std::vector<Check>& checks);

/// Writes `content` to `path` through a temporary file in the same directory
/// followed by a rename, so readers never observe a partial file.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Version string compiled into the library.
std::string code_version();

}  // namespace bsq
