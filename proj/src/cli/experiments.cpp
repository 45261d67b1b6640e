#include "bsq/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "bsq/errors.hpp"
#include "bsq/expansion.hpp"
#include "bsq/fit.hpp"
#include "bsq/lattice_evolve.hpp"
#include "bsq/lemmas.hpp"
#include "bsq/ode_reference.hpp"
#include "bsq/operators.hpp"
#include "bsq/polar_quadrature.hpp"
#include "bsq/propagator.hpp"
#include "bsq/solver.hpp"

namespace bsq {
namespace {

std::string num(double v) {
  std::ostringstream o;
  o << v;
  return o.str();
}

Check upper(std::string name, double value, double limit, std::string detail = {}) {
  return {std::move(name), value, limit, true, value <= limit, std::move(detail)};
}

Check exponent_check(const DecayFit& fit, double expected, double tol) {
  Check c;
  c.name = "exponent " + fit.label;
  c.value = fit.exponent;
  c.limit = tol;
  c.pass = std::abs(fit.exponent - expected) <= tol;
  c.detail = "expected " + num(expected) + " +- " + num(tol);
  return c;
}

}  // namespace

bool ExperimentResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return !c.asserted || c.pass; });
}

double predicted_linear_exponent(const NormDescriptor& norm, bool b0_zero, bool Omega0_zero) {
  if (b0_zero && Omega0_zero) return std::numeric_limits<double>::quiet_NaN();
  double e = norm.component == Component::b ? -0.25 : -0.75;
  if (b0_zero) e -= 0.5;
  if (norm.deriv == DerivWeight::dx) e -= 0.5;
  return e;
}

ExperimentResult run_linear_decay(const ExperimentConfig& config) {
  const LinearDecayConfig& c = config.linear;
  const PhysParams& p = config.physics;
  ExperimentResult out;
  const std::vector<double> times = geometric_times(c.t_min, c.t_max, c.per_decade);
  const bool b0_zero = c.b0.amplitude == 0.0;
  const bool O0_zero = c.Omega0.amplitude == 0.0;

  for (const NormDescriptor& norm : c.norms) {
    const PolarQuadGrid grid = PolarQuadGrid::build(p, c.t_max, {c.b0, c.Omega0}, norm, c.order);
    NormSeries s{norm.label(), {}, {}};
    for (double t : times) s.push(t, linear_norm_quadrature(c.b0, c.Omega0, p, t, norm, grid));
    const auto it = c.expect.find(s.label);
    const double expected = it != c.expect.end() ? it->second : predicted_linear_exponent(norm, b0_zero, O0_zero);
    try {
      DecayFit fit = fit_decay(s, c.fit_t_min, c.fit_t_max);
      if (std::isfinite(expected)) out.checks.push_back(exponent_check(fit, expected, c.tolerance));
      out.fits.push_back(std::move(fit));
    } catch (const FitError& e) {
      // A vanishing norm (e.g. zero data) has no exponent to compare.
      out.checks.push_back({"exponent " + s.label, 0.0, c.tolerance, std::isfinite(expected), false, e.what()});
    }
    out.series.push_back(std::move(s));
  }
  return out;
}

ExperimentResult run_nonlinear(const ExperimentConfig& config) {
  const NonlinearConfig& c = config.nonlinear;
  const PhysParams& p = config.physics;
  const Lattice lattice(c.nx, c.ny, c.lx, c.ly);
  const State ic = c.zero_initial ? State(lattice) : random_state(lattice, c.initial, config.seed);

  Solver solver(lattice, p, c.solver);
  RunResult run = solver.run(ic);
  ExperimentResult out;

  out.checks.push_back(upper("energy_law_defect", run.energy_defect, c.energy_tolerance,
                             "|E(t) - E(0) + int 2 alpha ||Omega||^2| / E(0) at t_end"));
  out.checks.push_back(upper("max_divergence", run.max_divergence, c.divergence_tolerance));
  const double mean = std::max(std::abs(run.final_state.b.mean()), std::abs(run.final_state.omega.mean()));
  out.checks.push_back(upper("final_mean", mean, 0.0));

  if (c.solver.linear_only) {
    const SpectralField Omega0 = omega_to_Omega(ic.omega, p);
    const LinearPair exact = linear_evolve_lattice(ic.b, Omega0, p, run.final_state.time);
    const SpectralField Omega = omega_to_Omega(run.final_state.omega, p);
    const double scale = std::max({max_abs(ic.b), max_abs(Omega0), std::numeric_limits<double>::min()});
    const double err = std::max(max_abs_diff(exact.b, run.final_state.b), max_abs_diff(exact.Omega, Omega)) / scale;
    out.checks.push_back(upper("linear_semigroup_defect", err, c.linear_tolerance,
                               "max mode error against the exact lattice semigroup, relative to max |data|"));
  }

  if (c.decay_window) {
    const auto [t0, t1] = *c.decay_window;
    auto fit_of = [&](std::size_t i) {
      DecayFit f = fit_decay(run.series[i], t0, t1);
      out.fits.push_back(f);
      return f.exponent;
    };
    // Series order from Solver::run: b, omega, dx b, dx omega.
    const double eb = fit_of(0), ew = fit_of(1), edb = fit_of(2), edw = fit_of(3);
    const std::string& lb = run.series[0].label;
    const std::string& lw = run.series[1].label;
    out.checks.push_back({"decay " + lb + " < 0", eb, 0.0, true, eb < 0.0, {}});
    out.checks.push_back({"decay " + lw + " < 0", ew, 0.0, true, ew < 0.0, {}});
    out.checks.push_back({"decay " + lw + " faster than " + lb, ew - eb, 0.0, true, ew < eb, {}});
    out.checks.push_back(
        {"decay " + run.series[2].label + " faster than " + lb, edb - eb, 0.0, true, edb < eb, {}});
    out.checks.push_back(
        {"decay " + run.series[3].label + " faster than " + lw, edw - ew, 0.0, true, edw < ew, {}});
  }
  out.series = std::move(run.series);
  return out;
}

ExperimentResult run_lemma_checks(const ExperimentConfig& config) {
  const LemmaConfig& c = config.lemmas;
  ExperimentResult out;

  const std::vector<double> at = geometric_times(c.angular_t_min, c.angular_t_max, 16);
  for (int k : c.angular_k) {
    NormSeries s{"angular_k" + std::to_string(k), {}, {}};
    for (double t : at) s.push(t, angular_integral(k, t));
    const double expected = -0.5 * (1 + k);
    DecayFit fit = fit_decay(s, c.angular_t_min, c.angular_t_max);
    out.checks.push_back(exponent_check(fit, expected, c.angular_exponent_tolerance));
    const double tm = at.back();
    const double scaled = s.values.back() * std::pow(tm, 0.5 * (1 + k));
    const double ck = angular_limit_constant(k);
    out.checks.push_back(upper("angular_limit k=" + std::to_string(k), std::abs(scaled / ck - 1.0),
                               c.angular_limit_tolerance,
                               "I(t) t^((1+k)/2) at t=" + num(tm) + " vs 2 Gamma((k+1)/2) = " + num(ck)));
    out.fits.push_back(std::move(fit));
    out.series.push_back(std::move(s));
  }

  const std::vector<double> bt = geometric_times(c.bhn_t_min, c.bhn_t_max, 16);
  for (double g : c.bhn_exponents) {
    for (double k : c.bhn_exponents) {
      NormSeries s{"bhn_g" + num(g) + "_k" + num(k), {}, {}};
      for (double t : bt) s.push(t, bhn_integral(g, k, t));
      DecayFit fit = fit_decay(s, c.bhn_t_min, c.bhn_t_max);
      Check chk = exponent_check(fit, 0.0 - bhn_phi(g, k), c.bhn_tolerance);
      if (std::abs(g + k - 1.0) < 1e-12) {
        chk.asserted = false;
        chk.detail += " (gamma + kappa = 1: logarithmic correction, not asserted)";
      }
      out.checks.push_back(std::move(chk));
      out.fits.push_back(std::move(fit));
      out.series.push_back(std::move(s));
    }
  }

  const double two_pi = 2.0 * std::acos(-1.0);
  const Lattice lattice(c.lattice_n, c.lattice_n, two_pi, two_pi);
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> index(c.index_min, c.index_max);
  std::uniform_real_distribution<double> slope(0.0, 3.0);
  RandomFieldSpec spec;
  spec.amplitude = 1.0;
  spec.k_max = c.lattice_n / 3.0;
  spec.dealias = false;

  double interp_max = 0.0, embed_max = 0.0;
  const double r_lo = std::max(0.0, c.index_min);
  std::uniform_real_distribution<double> r_index(r_lo, std::max(r_lo, c.index_max));
  for (int i = 0; i < c.random_fields; ++i) {
    spec.slope = slope(rng);
    const SpectralField g = random_field(lattice, spec, config.seed + 1 + static_cast<std::uint64_t>(i));
    double s[3] = {index(rng), index(rng), index(rng)};
    std::sort(s, s + 3);
    interp_max = std::max(interp_max, interpolation_ratio(g, s[0], s[1], s[2], i % 2 == 0));
    embed_max = std::max(embed_max, embedding_defect(g, r_index(rng)));
  }
  if (c.random_fields > 0) {
    out.checks.push_back(upper("interpolation_ratio_max", interp_max, 1.0 + c.ratio_slack,
                               std::to_string(c.random_fields) + " random fields"));
    out.checks.push_back(upper("embedding_defect_max", embed_max, 1.0 + c.ratio_slack,
                               std::to_string(c.random_fields) + " random fields"));
  }

  double bil_max = 0.0, bil_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < c.bilinear_samples; ++i) {
    spec.slope = slope(rng);
    const std::uint64_t base = config.seed + 0x51ED270B27A5C1D3ULL + 2 * static_cast<std::uint64_t>(i);
    const SpectralField f = random_field(lattice, spec, base);
    const SpectralField g = random_field(lattice, spec, base + 1);
    const double r = bilinear_ratio(f, g, c.bilinear_s);
    bil_max = std::max(bil_max, r);
    bil_min = std::min(bil_min, r);
  }
  if (c.bilinear_samples > 0) {
    out.checks.push_back({"bilinear_ratio_max", bil_max, 0.0, false, true,
                          "diagnostic over " + std::to_string(c.bilinear_samples) + " pairs, min " + num(bil_min)});
  }
  return out;
}

ExperimentResult run_propagator_verify(const ExperimentConfig& config) {
  const PropagatorConfig& c = config.propagator;
  ExperimentResult out;

  double oracle_err = 0.0, trace_err = 0.0, det_err = 0.0;
  std::string worst;
  for (double alpha : c.alphas) {
    for (double n : c.brunts) {
      const PhysParams p{alpha, n};
      std::vector<double> mus = c.mus;
      if (alpha / (2.0 * n) <= 1.0) mus.push_back(alpha / (2.0 * n));
      for (double mu : mus) {
        const EigenPair ev = eigenvalues(p, mu);
        trace_err = std::max(trace_err, std::abs(ev.plus + ev.minus - alpha));
        det_err = std::max(det_err, std::abs(ev.plus * ev.minus - n * n * mu * mu));
        for (double t : c.times) {
          const double e = max_abs_diff(exact_mode_propagator(p, mu, t), rk4_reference_propagator(p, mu, t, c.oracle_dt));
          if (e > oracle_err) {
            oracle_err = e;
            worst = "alpha=" + num(alpha) + " N=" + num(n) + " mu=" + num(mu) + " t=" + num(t);
          }
        }
      }
    }
  }
  out.checks.push_back(upper("propagator_vs_oracle", oracle_err, c.tolerance, "worst at " + worst));
  out.checks.push_back(upper("eigen_trace_identity", trace_err, 1e-12));
  out.checks.push_back(upper("eigen_det_identity", det_err, 1e-12));

  const PhysParams& p = config.physics;

  // Degenerate branch continuity: step across the tolerance band around mu*.
  if (p.alpha / (2.0 * p.bruntN) <= 1.0) {
    const double tol = degeneracy_tolerance(p);
    const double n2 = p.bruntN * p.bruntN;
    const double mu_in = std::sqrt((p.alpha * p.alpha - 0.5 * tol) / (4.0 * n2));
    const double mu_out = std::sqrt((p.alpha * p.alpha - 2.0 * tol) / (4.0 * n2));
    double jump = 0.0;
    for (double t : c.times) {
      jump = std::max(jump, max_abs_diff(exact_mode_propagator(p, mu_in, t), exact_mode_propagator(p, mu_out, t)));
    }
    out.checks.push_back(upper("degenerate_branch_jump", jump, 1e-8));
  }

  std::vector<double> mus = c.projector_mus;
  std::sort(mus.begin(), mus.end());
  NormSeries defect{"projector_defect", {}, {}};
  for (double mu : mus) {
    const EigenData d = eigen_data(p, mu);
    defect.push(mu, max_abs_diff(d.proj_minus, projector_expansion(p, mu, 2)));
  }
  for (std::size_t i = 0; i + 1 < mus.size(); ++i) {
    const double ratio = defect.values[i + 1] / defect.values[i];
    const double expect = std::pow(c.projector_ratio, std::log2(mus[i + 1] / mus[i]));
    Check chk;
    chk.name = "projector_order mu=" + num(mus[i + 1]) + "->" + num(mus[i]);
    chk.value = ratio;
    chk.limit = c.projector_ratio_tolerance;
    chk.pass = std::abs(ratio / expect - 1.0) <= c.projector_ratio_tolerance;
    chk.detail = "defect ratio, expected " + num(expect);
    out.checks.push_back(std::move(chk));
  }
  if (defect.size() >= kMinFitSamples) out.fits.push_back(fit_decay(defect, mus.front(), mus.back()));
  out.series.push_back(std::move(defect));

  if (in_slow_regime(p, 0.1)) {
    const auto rem = [&](double mu) { return std::abs(eigenvalues(p, mu).minus - eigen_expansion_slow(p, mu).minus); };
    const double ratio = rem(0.1) / rem(0.05);
    out.checks.push_back({"eigen_expansion_order", ratio, 8.0, true, ratio >= 8.0,
                          "|lambda_- - approx| shrink factor under mu 0.1 -> 0.05"});
  }

  // Fast-regime envelope: ||G(t)|| <= C (1 + t) exp(-alpha t / 2).
  constexpr int n_mu = 11;
  constexpr int n_t = 501;
  NormSeries envelope{"fast_envelope_ratio", {}, {}};
  double c_fit = 0.0;
  for (int j = 0; j < n_t; ++j) {
    const double t = c.envelope_t_max * j / (n_t - 1);
    double worst_mu = 0.0;
    for (int i = 0; i < n_mu; ++i) {
      const double mu = c.envelope_mu_min + (c.envelope_mu_max - c.envelope_mu_min) * i / (n_mu - 1);
      const double g = exact_mode_propagator(p, mu, t).op_norm();
      worst_mu = std::max(worst_mu, g / ((1.0 + t) * std::exp(-0.5 * p.alpha * t)));
    }
    envelope.push(t, worst_mu);
    c_fit = std::max(c_fit, worst_mu);
  }
  out.checks.push_back(upper("fast_envelope_constant", c_fit, c.envelope_c_max,
                             "sup ||G|| / ((1 + t) exp(-alpha t / 2)) over mu in [" + num(c.envelope_mu_min) + ", " +
                                 num(c.envelope_mu_max) + "], t in [0, " + num(c.envelope_t_max) + "]"));
  out.series.push_back(std::move(envelope));
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.physics.validate();
  switch (config.kind) {
    case ExperimentKind::linear_decay: return run_linear_decay(config);
    case ExperimentKind::nonlinear_run: return run_nonlinear(config);
    case ExperimentKind::lemma_checks: return run_lemma_checks(config);
    case ExperimentKind::propagator_verify: return run_propagator_verify(config);
  }
  throw ConfigError("unknown experiment kind");
}

}  // namespace bsq
