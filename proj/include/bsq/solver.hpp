#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bsq/norm_series.hpp"
#include "bsq/params.hpp"
#include "bsq/rhs.hpp"
#include "bsq/state.hpp"

namespace bsq {

enum class Formulation { vorticity, diagonalized };

struct SolverConfig {
  double dt = 1e-3;
  double t_end = 1.0;
  bool dealias = true;
  int output_every = 100;  // steps between series samples
  Formulation formulation = Formulation::vorticity;
  bool linear_only = false;  // test hook: drop quadratic terms
  double sigma = 1.0;        // regularity index of the tracked norms

  void validate() const;
  long steps() const;
};

struct RunResult {
  std::vector<NormSeries> series;
  State final_state;
  double max_divergence = 0.0;  // over output steps
  double energy_defect = 0.0;   // relative, at the final time
};

/// Classical RK4 integrator for the nonlinear system on the torus.
class Solver {
 public:
  Solver(const Lattice& lattice, const PhysParams& params, const SolverConfig& config);

  /// Advances by one dt. Throws StepSizeError when dt max|u| max|xi| > 0.5 and
  /// BlowUpError when the new state is not finite.
  State step(const State& state);

  /// Integrates from `ic` to config.t_end, sampling the tracked norms at step
  /// 0, every output_every steps and at the end.
  RunResult run(const State& ic);

  RhsEvaluator& rhs() { return rhs_; }

  /// int 2 alpha ||Omega||^2 dt over the most recent step, by the same RK4
  /// stages as the state, so the discrete energy law holds to O(dt^4).
  double last_dissipation() const { return last_dissipation_; }

 private:
  void eval(const SpectralField& b, const SpectralField& x, Tendency& out);

  Lattice lattice_;
  PhysParams params_;
  SolverConfig config_;
  RhsEvaluator rhs_;
  double max_xi_;
  std::vector<double> x_weights_;  // area * ||Omega||^2 = weighted_sq_sum(second field, x_weights_)
  double last_dissipation_ = 0.0;
};

State step(const State& state, const PhysParams& params, const SolverConfig& config);
RunResult run(const State& ic, const PhysParams& params, const SolverConfig& config);

std::string formulation_name(Formulation f);
Formulation parse_formulation(const std::string& name);

}  // namespace bsq
