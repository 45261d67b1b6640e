#include "bsq/output.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

#include <unistd.h>

#include "bsq/errors.hpp"

#ifndef BSQ_VERSION
#define BSQ_VERSION "0.0.0"
#endif

namespace bsq {
namespace {

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

std::string series_csv(const std::vector<NormSeries>& series) {
  std::string out = "t,label,value\n";
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      append_number(out, s.times[i]);
      out += ',';
      out += s.label;
      out += ',';
      append_number(out, s.values[i]);
      out += '\n';
    }
  }
  return out;
}

std::string fits_csv(const std::vector<DecayFit>& fits) {
  std::string out = "label,exponent,intercept,r_squared,t_min,t_max\n";
  for (const auto& f : fits) {
    out += f.label;
    for (double v : {f.exponent, f.intercept, f.r_squared, f.t_min, f.t_max}) {
      out += ',';
      append_number(out, v);
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json checks_json(const std::vector<Check>& checks) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["value"] = c.value;
    j["limit"] = c.limit;
    j["asserted"] = c.asserted;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot rename " + tmp.string() + " to " + path.string());
  }
}

std::string code_version() { return BSQ_VERSION; }

}  // namespace bsq
