#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bsq/params.hpp"
#include "bsq/polar_quadrature.hpp"
#include "bsq/profile.hpp"
#include "bsq/solver.hpp"
#include "bsq/state.hpp"

namespace bsq {

enum class ExperimentKind { linear_decay, nonlinear_run, lemma_checks, propagator_verify };

std::string experiment_name(ExperimentKind kind);
ExperimentKind parse_experiment(const std::string& name);

struct LinearDecayConfig {
  AnalyticProfile b0 = AnalyticProfile::gaussian(1.0, 1.0);
  AnalyticProfile Omega0 = AnalyticProfile::gaussian(1.0, 1.0);
  double t_min = 1e2;
  double t_max = 1e4;
  int per_decade = 16;
  int order = 16;
  double fit_t_min = 1e2;
  double fit_t_max = 1e4;
  std::vector<NormDescriptor> norms;
  double tolerance = 0.05;
  std::map<std::string, double> expect;  // label -> exponent; overrides the built-in table
};

struct NonlinearConfig {
  int nx = 64;
  int ny = 64;
  double lx = 0.0;  // 0 means 2 pi
  double ly = 0.0;
  SolverConfig solver;
  bool zero_initial = false;
  RandomFieldSpec initial;
  double energy_tolerance = 1e-6;
  double divergence_tolerance = 1e-12;
  double linear_tolerance = 1e-8;  // linear_only runs: distance to the exact semigroup
  std::optional<std::pair<double, double>> decay_window;
};

struct LemmaConfig {
  std::vector<int> angular_k{0, 1, 2, 3, 4};
  double angular_t_min = 1e2;
  double angular_t_max = 1e6;
  double angular_limit_tolerance = 0.01;
  double angular_exponent_tolerance = 0.01;
  std::vector<double> bhn_exponents{0.25, 0.5, 0.75};
  double bhn_t_min = 1e2;
  double bhn_t_max = 1e4;
  double bhn_tolerance = 0.05;
  int random_fields = 100;
  int lattice_n = 32;
  double index_min = -1.0;
  double index_max = 6.0;
  double ratio_slack = 1e-12;
  int bilinear_samples = 100;
  double bilinear_s = 1.0;
};

struct PropagatorConfig {
  std::vector<double> alphas{0.5, 1.0, 2.0};
  std::vector<double> brunts{0.5, 1.0, 2.0};
  std::vector<double> mus{0.0, 0.01, 0.3, 0.9, 1.0};  // alpha / (2N) is added when <= 1
  std::vector<double> times{0.1, 1.0, 10.0, 100.0};
  double oracle_dt = 1e-4;
  double tolerance = 1e-9;
  std::vector<double> projector_mus{0.2, 0.1, 0.05, 0.025};
  double projector_ratio = 8.0;
  double projector_ratio_tolerance = 0.25;
  double envelope_mu_min = 0.9;
  double envelope_mu_max = 1.0;
  double envelope_t_max = 50.0;
  double envelope_c_max = 10.0;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::linear_decay;
  std::uint64_t seed = 0;
  PhysParams physics;
  LinearDecayConfig linear;
  NonlinearConfig nonlinear;
  LemmaConfig lemmas;
  PropagatorConfig propagator;
  nlohmann::ordered_json effective;  // every setting actually used, defaults included
};

/// Parses a JSON configuration for `kind`. Unknown keys, out-of-range values
/// and malformed documents raise ConfigError naming the key path (or the
/// line and column for syntax errors). A top-level "experiment" key, when
/// present, must agree with `kind`.
ExperimentConfig parse_config(const std::string& text, ExperimentKind kind);

/// Same as parse_config with the seed replaced after parsing.
ExperimentConfig parse_config(const std::string& text, ExperimentKind kind, std::optional<std::uint64_t> seed);

}  // namespace bsq
