#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "bsq/errors.hpp"
#include "bsq/fft.hpp"
#include "bsq/lattice_evolve.hpp"
#include "bsq/operators.hpp"
#include "bsq/rhs.hpp"
#include "bsq/sobolev.hpp"
#include "bsq/solver.hpp"
#include "bsq/state.hpp"

using namespace bsq;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
SpectralField sample(const Lattice& lat, F&& g) {
  std::vector<double> v(lat.physical_size());
  for (int i = 0; i < lat.nx(); ++i)
    for (int j = 0; j < lat.ny(); ++j)
      v[static_cast<std::size_t>(i) * lat.ny() + j] = g(i * lat.lx() / lat.nx(), j * lat.ly() / lat.ny());
  SpectralField out(lat);
  FftPlan(lat).to_spectral(v, out);
  return out;
}

double rel_diff(const SpectralField& a, const SpectralField& b) {
  return max_abs_diff(a, b) / std::max(max_abs(a), max_abs(b));
}

State small_random(const Lattice& lat, double amp, std::uint64_t seed) {
  RandomFieldSpec spec;
  spec.amplitude = amp;
  spec.k_max = 5.0;
  return random_state(lat, spec, seed);
}

// RK4 error at t_end against a run with half the smallest step.
double state_error(const State& a, const State& b) {
  return std::max(max_abs_diff(a.b, b.b), max_abs_diff(a.omega, b.omega));
}

State integrate(State s, const PhysParams& p, double dt, double t_end) {
  SolverConfig cfg;
  cfg.dt = dt;
  cfg.t_end = t_end;
  Solver solver(s.lattice(), p, cfg);
  for (long i = 0; i < cfg.steps(); ++i) s = solver.step(s);
  return s;
}

}  // namespace

TEST_CASE("rhs of the zero state vanishes") {
  const Lattice lat(16, 16, 2 * kPi, 2 * kPi);
  const PhysParams p{1, 1};
  const SpectralField z(lat);
  const Tendency v = nonlinear_rhs_vorticity(z, z, p);
  CHECK(max_abs(v.db) == 0.0);
  CHECK(max_abs(v.dsecond) == 0.0);
  const Tendency d = nonlinear_rhs_diagonalized(z, z, p);
  CHECK(max_abs(d.db) == 0.0);
  CHECK(max_abs(d.dsecond) == 0.0);
}

TEST_CASE("single-mode vorticity example") {
  // omega = cos x, b = 0: the flow is a shear along y and transports nothing.
  const Lattice lat(16, 16, 2 * kPi, 2 * kPi);
  const PhysParams p{0.7, 1.5};
  const SpectralField omega = sample(lat, [](double x, double) { return std::cos(x); });
  const SpectralField zero(lat);
  const Tendency v = nonlinear_rhs_vorticity(zero, omega, p);
  const SpectralField want_b = sample(lat, [&](double x, double) { return -p.bruntN * p.bruntN * std::sin(x); });
  const SpectralField want_w = sample(lat, [&](double x, double) { return -p.alpha * std::cos(x); });
  CHECK(max_abs_diff(v.db, want_b) <= 1e-14);
  CHECK(max_abs_diff(v.dsecond, want_w) <= 1e-14);

  const SpectralField Omega = omega_to_Omega(omega, p);
  const Tendency d = nonlinear_rhs_diagonalized(zero, Omega, p);
  CHECK(max_abs_diff(d.db, want_b) <= 1e-14);
  CHECK(max_abs_diff(d.dsecond, sample(lat, [&](double x, double) { return -p.alpha * p.bruntN * std::cos(x); })) <=
        1e-14);
}

TEST_CASE("transport term example") {
  // omega = cos x gives phi = -cos x and w = -d_x phi = -sin x (u = 0); with
  // b = cos y the transport term is -w b_y = -sin x sin y.
  const Lattice lat(16, 16, 2 * kPi, 2 * kPi);
  const PhysParams p{1, 1};
  const SpectralField omega = sample(lat, [](double x, double) { return std::cos(x); });
  const Velocity vel = vorticity_to_velocity(omega);
  CHECK(max_abs(vel.u) <= 1e-16);
  CHECK(max_abs_diff(vel.w, sample(lat, [](double x, double) { return -std::sin(x); })) <= 1e-15);
  const SpectralField b = sample(lat, [](double, double y) { return std::cos(y); });
  const Tendency v = nonlinear_rhs_vorticity(b, omega, p);
  const SpectralField want_b = sample(lat, [](double x, double y) { return -std::sin(x) - std::sin(x) * std::sin(y); });
  const SpectralField want_w = sample(lat, [](double x, double) { return -std::cos(x); });
  CHECK(max_abs_diff(v.db, want_b) <= 1e-14);
  CHECK(max_abs_diff(v.dsecond, want_w) <= 1e-14);
}

TEST_CASE("tendencies are mean-zero and real") {
  const Lattice lat(32, 24, 2 * kPi, 3.0);
  const PhysParams p{1, 2};
  const State s = small_random(lat, 0.5, 11);
  for (bool dealias : {true, false}) {
    const Tendency v = nonlinear_rhs_vorticity(s.b, s.omega, p, dealias);
    CHECK(v.db.mean() == cplx(0.0));
    CHECK(v.dsecond.mean() == cplx(0.0));
    CHECK(hermitian_defect(v.db) <= 1e-15);
    const Tendency d = nonlinear_rhs_diagonalized(s.b, omega_to_Omega(s.omega, p), p, dealias);
    CHECK(d.db.mean() == cplx(0.0));
    CHECK(d.dsecond.mean() == cplx(0.0));
  }
}

TEST_CASE("vorticity and diagonalized forms agree") {
  for (const Lattice& lat : {Lattice(16, 16, 2 * kPi, 2 * kPi), Lattice(32, 32, 2 * kPi, 2 * kPi),
                             Lattice(24, 32, 4.0, 2 * kPi)}) {
    const PhysParams p{0.8, 1.3};
    const State s = small_random(lat, 1.0, 3);
    const Tendency v = nonlinear_rhs_vorticity(s.b, s.omega, p);
    const Tendency d = nonlinear_rhs_diagonalized(s.b, omega_to_Omega(s.omega, p), p);
    CHECK(rel_diff(v.db, d.db) <= 1e-12);
    CHECK(rel_diff(omega_to_Omega(v.dsecond, p), d.dsecond) <= 1e-12);
  }
}

TEST_CASE("commutator of a constant vanishes") {
  const Lattice lat(16, 16, 2 * kPi, 2 * kPi);
  RhsEvaluator rhs(lat, PhysParams{1, 1});
  const State s = small_random(lat, 1.0, 5);
  std::vector<double> f(lat.physical_size(), 2.5);
  CHECK(max_abs(rhs.commutator(f, s.b)) <= 1e-15);
}

TEST_CASE("energy examples") {
  const Lattice lat(16, 16, 2 * kPi, 2 * kPi);
  const PhysParams p{0.5, 1};
  CHECK(energy(State(lat), p).energy == 0.0);
  State s(lat);
  s.b = sample(lat, [](double x, double) { return std::cos(x); });
  CHECK(energy(s, p).energy == Approx(2 * kPi * kPi).epsilon(1e-14));
  CHECK(energy(s, p).dissipation == 0.0);
  State t(lat);
  t.omega = sample(lat, [](double x, double) { return std::cos(x); });
  CHECK(energy(t, p).energy == Approx(2 * kPi * kPi).epsilon(1e-14));
  CHECK(energy(t, p).dissipation == Approx(2 * kPi * kPi).epsilon(1e-14));
}

TEST_CASE("step guards") {
  const Lattice lat(32, 32, 2 * kPi, 2 * kPi);
  const PhysParams p{1, 1};
  SolverConfig cfg;
  cfg.dt = 0.5;
  Solver solver(lat, p, cfg);
  CHECK_THROWS_AS(solver.step(small_random(lat, 5.0, 1)), StepSizeError);

  SolverConfig ok;
  ok.dt = 1e-3;
  Solver s2(lat, p, ok);
  State bad = small_random(lat, 1e-2, 1);
  bad.time = 0.7;
  bad.omega.set({2, 1}, cplx(std::numeric_limits<double>::quiet_NaN(), 0.0));
  try {
    s2.step(bad);
    FAIL("expected BlowUpError");
  } catch (const BlowUpError& e) {
    CHECK(e.last_healthy_time() == 0.7);
  }

  SolverConfig neg;
  neg.dt = -1.0;
  CHECK_THROWS_AS(neg.validate(), RangeError);
  CHECK(SolverConfig{}.steps() == 1000);
}

TEST_CASE("zero state is a fixed point") {
  const Lattice lat(16, 16, 2 * kPi, 2 * kPi);
  const State z = integrate(State(lat), PhysParams{1, 1}, 1e-2, 0.5);
  CHECK(max_abs(z.b) == 0.0);
  CHECK(max_abs(z.omega) == 0.0);
  CHECK(z.time == Approx(0.5).epsilon(1e-15));
}

TEST_CASE("linear hook step matches the exact propagator to fifth order") {
  const Lattice lat(16, 16, 2 * kPi, 2 * kPi);
  const PhysParams p{1, 1};
  const State s = small_random(lat, 1.0, 9);
  const SpectralField Omega = omega_to_Omega(s.omega, p);
  std::vector<double> err;
  for (double dt : {0.04, 0.02, 0.01}) {
    SolverConfig cfg;
    cfg.dt = dt;
    cfg.linear_only = true;
    const State one = Solver(lat, p, cfg).step(s);
    const LinearPair ex = linear_evolve_lattice(s.b, Omega, p, dt);
    err.push_back(std::max(max_abs_diff(one.b, ex.b), max_abs_diff(omega_to_Omega(one.omega, p), ex.Omega)));
  }
  for (std::size_t i = 0; i + 1 < err.size(); ++i) {
    const double order = std::log2(err[i] / err[i + 1]);
    CAPTURE(order);
    CHECK(order == Approx(5.0).epsilon(0.1));
  }
}

TEST_CASE("nonlinear integration converges at fourth order") {
  const Lattice lat(32, 32, 2 * kPi, 2 * kPi);
  const PhysParams p{1, 1};
  const State ic = small_random(lat, 1.0, 21);
  const State ref = integrate(ic, p, 0.05 / 16, 1.0);
  std::vector<double> err;
  for (double dt : {0.05, 0.025, 0.0125}) err.push_back(state_error(integrate(ic, p, dt, 1.0), ref));
  for (std::size_t i = 0; i + 1 < err.size(); ++i) {
    const double order = std::log2(err[i] / err[i + 1]);
    CAPTURE(order);
    CHECK(order == Approx(4.0).epsilon(0.05));
  }
}

TEST_CASE("formulations give the same trajectory") {
  const Lattice lat(32, 32, 2 * kPi, 2 * kPi);
  const PhysParams p{1, 1};
  const State ic = small_random(lat, 0.5, 4);
  SolverConfig a;
  a.dt = 1e-2;
  a.t_end = 0.5;
  SolverConfig b = a;
  b.formulation = Formulation::diagonalized;
  const RunResult ra = run(ic, p, a);
  const RunResult rb = run(ic, p, b);
  CHECK(rel_diff(ra.final_state.b, rb.final_state.b) <= 1e-11);
  CHECK(rel_diff(ra.final_state.omega, rb.final_state.omega) <= 1e-11);
  CHECK(formulation_name(parse_formulation("diagonalized")) == "diagonalized");
  CHECK_THROWS_AS(parse_formulation("spectral"), RangeError);
}

TEST_CASE("run from zero data") {
  const Lattice lat(16, 16, 2 * kPi, 2 * kPi);
  SolverConfig cfg;
  cfg.dt = 1e-2;
  cfg.t_end = 2.0;
  cfg.output_every = 10;
  const RunResult r = run(State(lat), PhysParams{1, 1}, cfg);
  REQUIRE(r.series.size() == 9);
  for (const auto& s : r.series) {
    CAPTURE(s.label);
    for (double v : s.values) CHECK(v == 0.0);
  }
  CHECK(r.series[0].label == "H2_b");
  CHECK(r.series[1].label == "H1_omega");
  CHECK(r.series[0].size() == 21);
  CHECK(r.energy_defect == 0.0);
}

TEST_CASE("linear hook run tracks the exact lattice solution") {
  const Lattice lat(32, 32, 2 * kPi, 2 * kPi);
  const PhysParams p{1, 1};
  const State ic = small_random(lat, 1.0, 17);
  SolverConfig cfg;
  cfg.dt = 1e-2;
  cfg.t_end = 3.0;
  cfg.linear_only = true;
  const RunResult r = run(ic, p, cfg);
  const LinearPair ex = linear_evolve_lattice(ic.b, omega_to_Omega(ic.omega, p), p, 3.0);
  CHECK(max_abs_diff(r.final_state.b, ex.b) <= 1e-8 * max_abs(ic.b));
  const auto& h1 = r.series[4];
  CHECK(h1.label == "H1_Omega");
  CHECK(h1.values.back() == Approx(sobolev_norm(ex.Omega, 1.0, false)).epsilon(1e-8));
}

TEST_CASE("undamped runs conserve energy") {
  const Lattice lat(32, 32, 2 * kPi, 2 * kPi);
  const PhysParams p{0.0, 1.0};
  SolverConfig cfg;
  cfg.dt = 5e-3;
  cfg.t_end = 2.0;
  const RunResult r = run(small_random(lat, 0.3, 8), p, cfg);
  CHECK(r.energy_defect <= 1e-8);
  CHECK(r.max_divergence <= 1e-12);
  CHECK(std::abs(r.final_state.b.mean()) == 0.0);
}

TEST_CASE("random fields") {
  const Lattice lat(32, 32, 2 * kPi, 2 * kPi);
  RandomFieldSpec spec;
  spec.amplitude = 0.3;
  spec.exclude_kx0 = true;
  const SpectralField f = random_field(lat, spec, 42);
  CHECK(max_abs_diff(f, random_field(lat, spec, 42)) == 0.0);
  CHECK(max_abs_diff(f, random_field(lat, spec, 43)) > 0.0);
  CHECK(f.mean() == cplx(0.0));
  CHECK(hermitian_defect(f) == 0.0);
  std::vector<double> g(lat.physical_size());
  FftPlan(lat).to_physical(f, g);
  double mx = 0.0;
  for (double v : g) mx = std::max(mx, std::abs(v));
  CHECK(mx == Approx(0.3).epsilon(1e-12));
  for (int l = -16; l < 16; ++l) CHECK(f.at({0, l}) == cplx(0.0));
  const State s = random_state(lat, spec, 42);
  CHECK(max_abs_diff(s.b, s.omega) > 0.0);
}

TEST_CASE("discrete energy law holds to fourth order in dt") {
  const Lattice lat(32, 32, 2 * kPi, 2 * kPi);
  const PhysParams p{1, 1};
  const State ic = small_random(lat, 1.0, 13);
  std::vector<double> defect;
  for (double dt : {0.04, 0.02, 0.01}) {
    SolverConfig cfg;
    cfg.dt = dt;
    cfg.t_end = 2.0;
    defect.push_back(run(ic, p, cfg).energy_defect);
  }
  for (std::size_t i = 0; i + 1 < defect.size(); ++i) {
    const double order = std::log2(defect[i] / defect[i + 1]);
    CAPTURE(order);
    CHECK(order == Approx(4.0).epsilon(0.1));
  }
}
