#include "bsq/config.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "bsq/errors.hpp"

namespace bsq {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

std::string experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::linear_decay: return "linear-decay";
    case ExperimentKind::nonlinear_run: return "nonlinear-run";
    case ExperimentKind::lemma_checks: return "lemma-checks";
    case ExperimentKind::propagator_verify: return "propagator-verify";
  }
  return "?";
}

ExperimentKind parse_experiment(const std::string& name) {
  for (auto k : {ExperimentKind::linear_decay, ExperimentKind::nonlinear_run, ExperimentKind::lemma_checks,
                 ExperimentKind::propagator_verify}) {
    if (experiment_name(k) == name) return k;
  }
  throw ConfigError("unknown experiment '" + name + "'");
}

namespace {

std::string fmt(double v) {
  std::ostringstream o;
  o << v;
  return o.str();
}

// One JSON object being read. Every key that is looked up is remembered, and
// the value in effect (given or default) is copied into `out`.
class Section {
 public:
  Section(const json* in, ojson* out, std::string path) : in_(in), out_(out), path_(std::move(path)) {
    if (in_ && !in_->is_object()) throw ConfigError(where_self() + ": expected an object");
  }

  bool has(const std::string& key) const { return in_ && in_->contains(key); }

  double number(const std::string& key, double def, double lo, double hi, bool lo_open = false) {
    double v = def;
    if (const json* j = lookup(key)) {
      if (!j->is_number()) throw ConfigError(where(key) + ": expected a number");
      v = j->get<double>();
    }
    if (!std::isfinite(v) || (lo_open ? !(v > lo) : !(v >= lo)) || !(v <= hi)) {
      std::ostringstream msg;
      msg << where(key) << ": value " << v << " out of range " << (lo_open ? "(" : "[") << lo << ", " << hi << "]";
      throw ConfigError(msg.str());
    }
    (*out_)[key] = v;
    return v;
  }

  int integer(const std::string& key, int def, int lo, int hi) {
    long long v = def;
    if (const json* j = lookup(key)) {
      if (!j->is_number_integer()) throw ConfigError(where(key) + ": expected an integer");
      v = j->get<long long>();
    }
    if (v < lo || v > hi) {
      throw ConfigError(where(key) + ": value " + std::to_string(v) + " out of range [" + std::to_string(lo) +
                        ", " + std::to_string(hi) + "]");
    }
    (*out_)[key] = v;
    return static_cast<int>(v);
  }

  std::uint64_t u64(const std::string& key, std::uint64_t def) {
    std::uint64_t v = def;
    if (const json* j = lookup(key)) {
      if (!j->is_number_unsigned() && !(j->is_number_integer() && j->get<long long>() >= 0)) {
        throw ConfigError(where(key) + ": expected a non-negative integer");
      }
      v = j->get<std::uint64_t>();
    }
    (*out_)[key] = v;
    return v;
  }

  bool boolean(const std::string& key, bool def) {
    bool v = def;
    if (const json* j = lookup(key)) {
      if (!j->is_boolean()) throw ConfigError(where(key) + ": expected true or false");
      v = j->get<bool>();
    }
    (*out_)[key] = v;
    return v;
  }

  std::string string(const std::string& key, const std::string& def) {
    std::string v = def;
    if (const json* j = lookup(key)) {
      if (!j->is_string()) throw ConfigError(where(key) + ": expected a string");
      v = j->get<std::string>();
    }
    (*out_)[key] = v;
    return v;
  }

  std::vector<double> numbers(const std::string& key, const std::vector<double>& def, double lo, double hi) {
    std::vector<double> v = def;
    if (const json* j = lookup(key)) {
      if (!j->is_array() || j->empty()) throw ConfigError(where(key) + ": expected a non-empty array of numbers");
      v.clear();
      for (std::size_t i = 0; i < j->size(); ++i) {
        const json& e = (*j)[i];
        if (!e.is_number()) throw ConfigError(where(key) + "[" + std::to_string(i) + "]: expected a number");
        const double x = e.get<double>();
        if (!std::isfinite(x) || x < lo || x > hi) {
          throw ConfigError(where(key) + "[" + std::to_string(i) + "]: value " + fmt(x) + " out of range [" +
                            fmt(lo) + ", " + fmt(hi) + "]");
        }
        v.push_back(x);
      }
    }
    (*out_)[key] = v;
    return v;
  }

  std::vector<int> integers(const std::string& key, const std::vector<int>& def, int lo, int hi) {
    std::vector<int> v = def;
    if (const json* j = lookup(key)) {
      if (!j->is_array() || j->empty()) throw ConfigError(where(key) + ": expected a non-empty array of integers");
      v.clear();
      for (std::size_t i = 0; i < j->size(); ++i) {
        const json& e = (*j)[i];
        if (!e.is_number_integer() || e.get<long long>() < lo || e.get<long long>() > hi) {
          throw ConfigError(where(key) + "[" + std::to_string(i) + "]: expected an integer in [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
        v.push_back(e.get<int>());
      }
    }
    (*out_)[key] = v;
    return v;
  }

  Section child(const std::string& key) {
    const json* j = lookup(key);
    (*out_)[key] = ojson::object();
    return Section(j, &(*out_)[key], where(key));
  }

  /// Raw sub-document, marked as seen.
  const json* raw(const std::string& key) { return lookup(key); }
  ojson& out() { return *out_; }
  std::string where(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  void finish() const {
    if (!in_) return;
    for (auto it = in_->begin(); it != in_->end(); ++it) {
      if (!seen_.count(it.key())) throw ConfigError(where(it.key()) + ": unknown key");
    }
  }

 private:
  const json* lookup(const std::string& key) {
    seen_.insert(key);
    if (!in_) return nullptr;
    auto it = in_->find(key);
    return it == in_->end() ? nullptr : &*it;
  }
  std::string where_self() const { return path_.empty() ? "<root>" : path_; }

  const json* in_;
  ojson* out_;
  std::string path_;
  std::set<std::string> seen_;
};

AnalyticProfile read_profile(Section s, const AnalyticProfile& def) {
  AnalyticProfile p;
  const std::string kind = s.string("kind", AnalyticProfile::kind_name(def.kind));
  try {
    p.kind = AnalyticProfile::parse_kind(kind);
  } catch (const Error&) {
    throw ConfigError(s.where("kind") + ": unknown profile kind '" + kind + "'");
  }
  p.amplitude = s.number("amplitude", def.amplitude, -1e6, 1e6);
  if (p.kind != AnalyticProfile::Kind::algebraic) p.width = s.number("width", def.width, 0.0, 1e6, true);
  if (p.kind == AnalyticProfile::Kind::ring_gaussian) p.radius = s.number("radius", def.radius, 0.0, 1e6);
  if (p.kind == AnalyticProfile::Kind::polynomial_gaussian) p.power = s.number("power", def.power, 0.0, 64.0);
  if (p.kind == AnalyticProfile::Kind::algebraic) p.power = s.number("power", 2.0, 0.0, 64.0, true);
  s.finish();
  return p;
}

DerivWeight parse_deriv(const std::string& name, const std::string& where) {
  if (name == "none") return DerivWeight::none;
  if (name == "dx") return DerivWeight::dx;
  if (name == "dy") return DerivWeight::dy;
  throw ConfigError(where + ": expected none, dx or dy");
}

std::string deriv_name(DerivWeight d) {
  return d == DerivWeight::dx ? "dx" : d == DerivWeight::dy ? "dy" : "none";
}

std::vector<NormDescriptor> default_norms() {
  std::vector<NormDescriptor> out;
  for (Component c : {Component::b, Component::Omega}) {
    for (DerivWeight d : {DerivWeight::none, DerivWeight::dx, DerivWeight::dy}) out.push_back({c, 1.0, d});
  }
  return out;
}

void read_linear(Section s, LinearDecayConfig& c) {
  c.b0 = read_profile(s.child("b0"), c.b0);
  c.Omega0 = read_profile(s.child("Omega0"), c.Omega0);
  c.t_min = s.number("t_min", c.t_min, 0.0, 1e12, true);
  c.t_max = s.number("t_max", c.t_max, c.t_min, 1e12);
  c.per_decade = s.integer("per_decade", c.per_decade, 1, 1000);
  c.order = s.integer("order", c.order, 4, 32);
  if (c.order != 4 && c.order != 8 && c.order != 16 && c.order != 32) {
    throw ConfigError(s.where("order") + ": must be 4, 8, 16 or 32");
  }
  c.fit_t_min = s.number("fit_t_min", c.t_min, c.t_min, c.t_max);
  c.fit_t_max = s.number("fit_t_max", c.t_max, c.fit_t_min, c.t_max);
  c.tolerance = s.number("tolerance", c.tolerance, 0.0, 10.0, true);

  c.norms.clear();
  if (const json* arr = s.raw("norms")) {
    if (!arr->is_array() || arr->empty()) throw ConfigError(s.where("norms") + ": expected a non-empty array");
    s.out()["norms"] = ojson::array();
    for (std::size_t i = 0; i < arr->size(); ++i) {
      ojson item = ojson::object();
      Section e(&(*arr)[i], &item, s.where("norms") + "[" + std::to_string(i) + "]");
      NormDescriptor d;
      const std::string comp = e.string("component", "b");
      if (comp == "b") d.component = Component::b;
      else if (comp == "Omega") d.component = Component::Omega;
      else throw ConfigError(e.where("component") + ": expected b or Omega");
      d.r = e.number("r", 0.0, 0.0, 8.0);
      d.deriv = parse_deriv(e.string("deriv", "none"), e.where("deriv"));
      e.finish();
      c.norms.push_back(d);
      s.out()["norms"].push_back(item);
    }
  } else {
    c.norms = default_norms();
    s.out()["norms"] = ojson::array();
    for (const auto& d : c.norms) {
      s.out()["norms"].push_back(
          {{"component", d.component == Component::b ? "b" : "Omega"}, {"r", d.r}, {"deriv", deriv_name(d.deriv)}});
    }
  }

  c.expect.clear();
  if (const json* ex = s.raw("expect")) {
    if (!ex->is_object()) throw ConfigError(s.where("expect") + ": expected an object of label: exponent");
    std::set<std::string> labels;
    for (const auto& d : c.norms) labels.insert(d.label());
    for (auto it = ex->begin(); it != ex->end(); ++it) {
      const std::string w = s.where("expect") + "." + it.key();
      if (!labels.count(it.key())) throw ConfigError(w + ": unknown key (no such norm label)");
      if (!it->is_number()) throw ConfigError(w + ": expected a number");
      c.expect[it.key()] = it->get<double>();
    }
    s.out()["expect"] = *ex;
  }
  s.finish();
}

void read_nonlinear(Section s, NonlinearConfig& c) {
  c.nx = s.integer("nx", c.nx, 8, 4096);
  c.ny = s.integer("ny", c.ny, 8, 4096);
  if (c.nx % 2 || c.ny % 2) throw ConfigError(s.where(c.nx % 2 ? "nx" : "ny") + ": must be even");
  const double two_pi = 2.0 * std::numbers::pi;
  c.lx = s.number("lx", two_pi, 0.0, 1e6, true);
  c.ly = s.number("ly", two_pi, 0.0, 1e6, true);

  SolverConfig& sc = c.solver;
  sc.dt = s.number("dt", sc.dt, 0.0, 10.0, true);
  sc.t_end = s.number("t_end", sc.t_end, 0.0, 1e6);
  sc.output_every = s.integer("output_every", sc.output_every, 1, 1 << 30);
  sc.dealias = s.boolean("dealias", sc.dealias);
  sc.linear_only = s.boolean("linear_only", sc.linear_only);
  sc.sigma = s.number("sigma", sc.sigma, 0.0, 8.0);
  const std::string form = s.string("formulation", formulation_name(sc.formulation));
  try {
    sc.formulation = parse_formulation(form);
  } catch (const Error&) {
    throw ConfigError(s.where("formulation") + ": expected vorticity or diagonalized");
  }
  const double steps = sc.t_end / sc.dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps)) {
    throw ConfigError(s.where("t_end") + ": must be an integer multiple of dt");
  }

  Section ic = s.child("initial");
  const std::string type = ic.string("type", "random");
  if (type != "random" && type != "zero") throw ConfigError(ic.where("type") + ": expected random or zero");
  c.zero_initial = type == "zero";
  RandomFieldSpec& r = c.initial;
  r.amplitude = ic.number("amplitude", r.amplitude, 0.0, 1e3);
  r.k_min = ic.number("k_min", r.k_min, 0.0, 1e6);
  r.k_max = ic.number("k_max", r.k_max, r.k_min, 1e6);
  r.slope = ic.number("slope", r.slope, -16.0, 16.0);
  r.exclude_kx0 = ic.boolean("exclude_kx0", r.exclude_kx0);
  r.dealias = sc.dealias;
  ic.finish();

  c.energy_tolerance = s.number("energy_tolerance", c.energy_tolerance, 0.0, 1.0, true);
  c.divergence_tolerance = s.number("divergence_tolerance", c.divergence_tolerance, 0.0, 1.0, true);
  c.linear_tolerance = s.number("linear_tolerance", c.linear_tolerance, 0.0, 1.0, true);
  if (const json* w = s.raw("decay_window")) {
    if (!w->is_array() || w->size() != 2 || !(*w)[0].is_number() || !(*w)[1].is_number()) {
      throw ConfigError(s.where("decay_window") + ": expected [t_min, t_max]");
    }
    const double a = (*w)[0].get<double>(), b = (*w)[1].get<double>();
    if (!(a > 0.0) || !(b > a) || b > sc.t_end) {
      throw ConfigError(s.where("decay_window") + ": need 0 < t_min < t_max <= t_end");
    }
    c.decay_window = std::make_pair(a, b);
    s.out()["decay_window"] = {a, b};
  }
  s.finish();
}

void read_lemmas(Section s, LemmaConfig& c) {
  c.angular_k = s.integers("angular_k", c.angular_k, 0, 32);
  c.angular_t_min = s.number("angular_t_min", c.angular_t_min, 1.0, 1e12);
  c.angular_t_max = s.number("angular_t_max", c.angular_t_max, c.angular_t_min, 1e12);
  c.angular_limit_tolerance = s.number("angular_limit_tolerance", c.angular_limit_tolerance, 0.0, 1.0, true);
  c.angular_exponent_tolerance = s.number("angular_exponent_tolerance", c.angular_exponent_tolerance, 0.0, 1.0, true);
  c.bhn_exponents = s.numbers("bhn_exponents", c.bhn_exponents, 0.0, 0.999999);
  c.bhn_t_min = s.number("bhn_t_min", c.bhn_t_min, 2.0, 1e12);
  c.bhn_t_max = s.number("bhn_t_max", c.bhn_t_max, c.bhn_t_min, 1e12);
  c.bhn_tolerance = s.number("bhn_tolerance", c.bhn_tolerance, 0.0, 1.0, true);
  c.random_fields = s.integer("random_fields", c.random_fields, 0, 100000);
  c.lattice_n = s.integer("lattice_n", c.lattice_n, 8, 1024);
  if (c.lattice_n % 2) throw ConfigError(s.where("lattice_n") + ": must be even");
  c.index_min = s.number("index_min", c.index_min, -1.0, 16.0);
  c.index_max = s.number("index_max", c.index_max, c.index_min, 16.0);
  c.ratio_slack = s.number("ratio_slack", c.ratio_slack, 0.0, 1.0);
  c.bilinear_samples = s.integer("bilinear_samples", c.bilinear_samples, 0, 100000);
  c.bilinear_s = s.number("bilinear_s", c.bilinear_s, 0.0, 8.0, true);
  s.finish();
}

void read_propagator(Section s, PropagatorConfig& c) {
  c.alphas = s.numbers("alphas", c.alphas, 1e-6, 1e3);
  c.brunts = s.numbers("brunts", c.brunts, 1e-6, 1e3);
  c.mus = s.numbers("mus", c.mus, -1.0, 1.0);
  c.times = s.numbers("times", c.times, 0.0, 1e4);
  c.oracle_dt = s.number("oracle_dt", c.oracle_dt, 0.0, 1.0, true);
  c.tolerance = s.number("tolerance", c.tolerance, 0.0, 1.0, true);
  c.projector_mus = s.numbers("projector_mus", c.projector_mus, 1e-6, 1.0);
  c.projector_ratio = s.number("projector_ratio", c.projector_ratio, 1.0, 1e6);
  c.projector_ratio_tolerance = s.number("projector_ratio_tolerance", c.projector_ratio_tolerance, 0.0, 1.0, true);
  c.envelope_mu_min = s.number("envelope_mu_min", c.envelope_mu_min, 0.0, 1.0);
  c.envelope_mu_max = s.number("envelope_mu_max", c.envelope_mu_max, c.envelope_mu_min, 1.0);
  c.envelope_t_max = s.number("envelope_t_max", c.envelope_t_max, 0.0, 1e4, true);
  c.envelope_c_max = s.number("envelope_c_max", c.envelope_c_max, 0.0, 1e6, true);
  s.finish();
}

std::size_t line_of(const std::string& text, std::size_t byte, std::size_t& column) {
  std::size_t line = 1, last_nl = 0;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      last_nl = i + 1;
    }
  }
  column = byte >= last_nl ? byte - last_nl : 0;
  return line;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text, ExperimentKind kind) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t col = 0;
    const std::size_t line = line_of(text, e.byte > 0 ? e.byte - 1 : 0, col);
    std::ostringstream msg;
    msg << "line " << line << ", column " << col + 1 << ": malformed JSON (" << e.what() << ")";
    throw ConfigError(msg.str());
  }
  if (!doc.is_object()) throw ConfigError("<root>: expected an object");

  ExperimentConfig cfg;
  cfg.kind = kind;
  cfg.effective = ojson::object();
  Section root(&doc, &cfg.effective, "");
  const std::string exp = root.string("experiment", experiment_name(kind));
  if (exp != experiment_name(kind)) {
    throw ConfigError("experiment: config is for '" + exp + "' but the command is '" + experiment_name(kind) + "'");
  }
  cfg.seed = root.u64("seed", 0);

  Section phys = root.child("physics");
  cfg.physics.alpha = phys.number("alpha", 1.0, 0.0, 1e6);
  cfg.physics.bruntN = phys.number("bruntN", 1.0, 0.0, 1e6, true);
  phys.finish();

  // Only the section of the selected experiment is echoed; the others are
  // still validated when present.
  ojson scratch;
  auto section = [&](const char* key, ExperimentKind owner) {
    if (owner == kind) return root.child(key);
    const json* j = root.raw(key);
    scratch = ojson::object();
    return Section(j, &scratch, key);
  };
  read_linear(section("linear", ExperimentKind::linear_decay), cfg.linear);
  read_nonlinear(section("nonlinear", ExperimentKind::nonlinear_run), cfg.nonlinear);
  read_lemmas(section("lemmas", ExperimentKind::lemma_checks), cfg.lemmas);
  read_propagator(section("propagator", ExperimentKind::propagator_verify), cfg.propagator);
  root.finish();

  if (kind != ExperimentKind::nonlinear_run && !(cfg.physics.alpha > 0.0)) {
    throw ConfigError("physics.alpha: must be > 0 for " + experiment_name(kind));
  }
  return cfg;
}

ExperimentConfig parse_config(const std::string& text, ExperimentKind kind, std::optional<std::uint64_t> seed) {
  ExperimentConfig cfg = parse_config(text, kind);
  if (seed) {
    cfg.seed = *seed;
    cfg.effective["seed"] = *seed;
  }
  return cfg;
}

}  // namespace bsq
