#pragma once

#include <string>
#include <vector>

#include "bsq/config.hpp"
#include "bsq/norm_series.hpp"

namespace bsq {

/// One tolerance evaluated by an experiment. Unasserted checks are recorded
/// for reporting and never affect the exit status.
struct Check {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool asserted = true;
  bool pass = true;
  std::string detail;
};

struct ExperimentResult {
  std::vector<NormSeries> series;
  std::vector<DecayFit> fits;
  std::vector<Check> checks;

  bool all_passed() const;
};

ExperimentResult run_linear_decay(const ExperimentConfig& config);
ExperimentResult run_nonlinear(const ExperimentConfig& config);
ExperimentResult run_lemma_checks(const ExperimentConfig& config);
ExperimentResult run_propagator_verify(const ExperimentConfig& config);

/// Dispatches on config.kind.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Decay exponent of a continuous linear norm predicted for Gaussian-type data.
/// The slow mode carries b0 at order 1 and Omega0 at order mu into b, one more
/// power of mu into Omega, and every d_x adds another; each power of mu costs
/// t^(-1/2) after the angular integration.
double predicted_linear_exponent(const NormDescriptor& norm, bool b0_zero, bool Omega0_zero);

}  // namespace bsq
