#include "bsq/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bsq/errors.hpp"
#include "bsq/multiplier.hpp"
#include "bsq/operators.hpp"
#include "bsq/simd/kernels.hpp"
#include "bsq/sobolev.hpp"

namespace bsq {

void SolverConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw RangeError("dt must be > 0");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw RangeError("t_end must be >= 0");
  if (output_every < 1) throw RangeError("output_every must be >= 1");
}

long SolverConfig::steps() const { return std::lround(t_end / dt); }

std::string formulation_name(Formulation f) { return f == Formulation::vorticity ? "vorticity" : "diagonalized"; }

Formulation parse_formulation(const std::string& name) {
  if (name == "vorticity") return Formulation::vorticity;
  if (name == "diagonalized") return Formulation::diagonalized;
  throw RangeError("unknown formulation '" + name + "'");
}

namespace {

// Weights N^2 |xi|^-2 * multiplicity, so that area * weighted_sq_sum(omega) = ||Omega||^2.
std::vector<double> omega_energy_weights(const Lattice& lat, const PhysParams& p) {
  std::vector<double> w(lat.spectral_size());
  for (int row = 0; row < lat.rows(); ++row) {
    for (int col = 0; col < lat.cols(); ++col) {
      const Vec2 xi = lat.xi_at(row, col);
      const double r2 = xi.x * xi.x + xi.y * xi.y;
      w[lat.offset(row, col)] = r2 == 0.0 ? 0.0 : p.bruntN * p.bruntN / r2 * lat.multiplicity(col);
    }
  }
  return w;
}

}  // namespace

Solver::Solver(const Lattice& lattice, const PhysParams& params, const SolverConfig& config)
    : lattice_(lattice), params_(params), config_(config), rhs_(lattice, params, config.dealias), max_xi_(0.0) {
  params_.validate();
  config_.validate();
  rhs_.set_linear_only(config.linear_only);
  for (int row = 0; row < lattice.rows(); ++row) {
    for (int col = 0; col < lattice.cols(); ++col) {
      if (config.dealias && !dealias_keeps(lattice, {lattice.k_of_row(row), lattice.l_of_col(col)})) continue;
      max_xi_ = std::max(max_xi_, norm(lattice.xi_at(row, col)));
    }
  }
  if (config.formulation == Formulation::vorticity) {
    x_weights_ = omega_energy_weights(lattice, params);
  } else {
    x_weights_.resize(lattice.spectral_size());
    for (int row = 0; row < lattice.rows(); ++row) {
      for (int col = 0; col < lattice.cols(); ++col) x_weights_[lattice.offset(row, col)] = lattice.multiplicity(col);
    }
  }
}

void Solver::eval(const SpectralField& b, const SpectralField& x, Tendency& out) {
  out = config_.formulation == Formulation::vorticity ? rhs_.vorticity(b, x) : rhs_.diagonalized(b, x);
}

namespace {

bool finite(const SpectralField& f) {
  for (const auto& c : f.coeffs()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

}  // namespace

State Solver::step(const State& state) {
  const double dt = config_.dt;
  const bool diag = config_.formulation == Formulation::diagonalized;
  const SpectralField& b0 = state.b;
  const SpectralField x0 = diag ? omega_to_Omega(state.omega, params_) : state.omega;

  Tendency k{SpectralField(lattice_), SpectralField(lattice_)};
  SpectralField yb(lattice_), yx(lattice_);
  SpectralField acc_b(b0), acc_x(x0);

  const double weights[4] = {dt / 6.0, dt / 3.0, dt / 3.0, dt / 6.0};
  const double offsets[3] = {0.5 * dt, 0.5 * dt, dt};
  const double diss_scale = 2.0 * params_.alpha * lattice_.area();
  double dissipation = 0.0;
  for (int stage = 0; stage < 4; ++stage) {
    dissipation += weights[stage] * diss_scale * kernels::weighted_sq_sum((stage == 0 ? x0 : yx).coeffs(), x_weights_);
    if (stage == 0) {
      eval(b0, x0, k);
      const double cfl = dt * rhs_.last_max_velocity() * max_xi_;
      if (cfl > 0.5) {
        std::ostringstream msg;
        msg << "CFL guard violated at t=" << state.time << ": dt*max|u|*max|xi| = " << cfl << " > 0.5";
        throw StepSizeError(msg.str());
      }
    } else {
      eval(yb, yx, k);
    }
    kernels::axpy(acc_b.coeffs(), acc_b.coeffs(), weights[stage], k.db.coeffs());
    kernels::axpy(acc_x.coeffs(), acc_x.coeffs(), weights[stage], k.dsecond.coeffs());
    if (stage < 3) {
      kernels::axpy(yb.coeffs(), b0.coeffs(), offsets[stage], k.db.coeffs());
      kernels::axpy(yx.coeffs(), x0.coeffs(), offsets[stage], k.dsecond.coeffs());
    }
  }
  acc_b.stored(0, 0) = 0.0;
  acc_x.stored(0, 0) = 0.0;
  if (!finite(acc_b) || !finite(acc_x)) {
    std::ostringstream msg;
    msg << "non-finite state after step from t=" << state.time;
    throw BlowUpError(msg.str(), state.time);
  }
  last_dissipation_ = dissipation;
  State next(std::move(acc_b), diag ? Omega_to_omega(acc_x, params_) : std::move(acc_x), state.time + dt);
  return next;
}

namespace {

std::string idx(double s) {
  std::ostringstream o;
  o << s;
  return o.str();
}

}  // namespace

RunResult Solver::run(const State& ic) {
  const double sigma = config_.sigma;
  const std::string lb = "H" + idx(sigma + 1) + "_b";
  const std::string lw = "H" + idx(sigma) + "_omega";
  const std::string ldxb = "H" + idx(sigma) + "_dx_b";
  const std::string ldxw = "H" + idx(sigma - 1) + "_dx_omega";
  const std::string lO = "H" + idx(sigma) + "_Omega";
  std::vector<NormSeries> series{{lb, {}, {}},
                                 {lw, {}, {}},
                                 {ldxb, {}, {}},
                                 {ldxw, {}, {}},
                                 {lO, {}, {}},
                                 {"energy", {}, {}},
                                 {"energy_defect", {}, {}},
                                 {"divergence", {}, {}},
                                 {"M_sigma", {}, {}}};

  std::vector<double> b_w(lattice_.spectral_size());
  for (int row = 0; row < lattice_.rows(); ++row) {
    for (int col = 0; col < lattice_.cols(); ++col) b_w[lattice_.offset(row, col)] = lattice_.multiplicity(col);
  }
  const std::vector<double> o_w = omega_energy_weights(lattice_, params_);
  const double area = lattice_.area();
  auto energy_of = [&](const State& s, double& omega_part) {
    omega_part = area * kernels::weighted_sq_sum(s.omega.coeffs(), o_w);
    return area * kernels::weighted_sq_sum(s.b.coeffs(), b_w) + omega_part;
  };

  FftPlan fft(lattice_);
  std::vector<double> div_phys(lattice_.physical_size());
  double m_sigma = 0.0;
  RunResult result{{}, ic, 0.0, 0.0};

  double o2 = 0.0;
  const double e0 = energy_of(ic, o2);
  double dissipated = 0.0;

  auto record = [&](const State& s, double e) {
    const double t = s.time;
    const SpectralField Omega = omega_to_Omega(s.omega, params_);
    const double nb = sobolev_norm(s.b, sigma + 1, false);
    series[0].push(t, nb);
    series[1].push(t, sobolev_norm(s.omega, sigma, false));
    series[2].push(t, sobolev_norm(s.b, sigma, false, DerivWeight::dx));
    series[3].push(t, sobolev_norm(s.omega, sigma - 1, false, DerivWeight::dx));
    const double nO = sobolev_norm(Omega, sigma, false);
    series[4].push(t, nO);
    series[5].push(t, e);
    series[6].push(t, std::abs(e - e0 + dissipated));
    const Velocity v = vorticity_to_velocity(s.omega);
    fft.to_physical(divergence(v.u, v.w), div_phys);
    const double div = kernels::max_abs(div_phys);
    result.max_divergence = std::max(result.max_divergence, div);
    series[7].push(t, div);
    if (t >= 1.0) {
      const double m = std::pow(t, 0.25) * sobolev_norm(s.b, sigma, false) + std::pow(t, 0.75) * nO +
                       std::pow(t, 0.75) * sobolev_norm(s.b, sigma - 1, false, DerivWeight::dx) +
                       std::pow(t, 1.25) * sobolev_norm(Omega, sigma - 1, false, DerivWeight::dx);
      m_sigma = std::max(m_sigma, m);
      series[8].push(t, m_sigma);
    }
  };

  State s = ic;
  record(s, e0);
  const long n = config_.steps();
  for (long i = 1; i <= n; ++i) {
    State next = step(s);
    next.time = ic.time + static_cast<double>(i) * config_.dt;
    const double e = energy_of(next, o2);
    dissipated += last_dissipation_;
    s = std::move(next);
    if (i % config_.output_every == 0 || i == n) record(s, e);
  }
  const double e_end = energy_of(s, o2);
  result.energy_defect = e0 > 0.0 ? std::abs(e_end - e0 + dissipated) / e0 : 0.0;
  result.series = std::move(series);
  result.final_state = std::move(s);
  return result;
}

State step(const State& state, const PhysParams& params, const SolverConfig& config) {
  Solver solver(state.lattice(), params, config);
  return solver.step(state);
}

RunResult run(const State& ic, const PhysParams& params, const SolverConfig& config) {
  Solver solver(ic.lattice(), params, config);
  return solver.run(ic);
}

}  // namespace bsq
