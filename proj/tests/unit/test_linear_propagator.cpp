#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bsq/errors.hpp"
#include "bsq/expansion.hpp"
#include "bsq/lattice_evolve.hpp"
#include "bsq/ode_reference.hpp"
#include "bsq/propagator.hpp"
#include "bsq/sobolev.hpp"
#include "bsq/state.hpp"
#include "oracles.hpp"

using namespace bsq;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> mu_grid(const PhysParams& p) {
  std::vector<double> mus{0.0, 0.01, 0.3, 0.9, 1.0};
  if (p.alpha / (2 * p.bruntN) <= 1.0) mus.push_back(p.alpha / (2 * p.bruntN));
  return mus;
}

}  // namespace

TEST_CASE("mode generator invariants") {
  const PhysParams p{0.7, 1.3};
  const Mat2 e = mode_generator(p, 0.4);
  CHECK(e.a11 == cplx(0.0));
  CHECK(e.a12 == cplx(0.0, -1.3 * 0.4));
  CHECK(e.trace() == cplx(0.7));
  CHECK(std::abs(e.det() - 1.3 * 1.3 * 0.16) < 1e-15);
}

TEST_CASE("eigenvalue examples") {
  const EigenPair a = eigenvalues(PhysParams{1, 1}, 0.0);
  CHECK(a.plus == cplx(1.0));
  CHECK(a.minus == cplx(0.0));
  const EigenPair b = eigenvalues(PhysParams{2, 1}, 1.0);
  CHECK(std::abs(b.plus - 1.0) < 1e-15);
  CHECK(std::abs(b.minus - 1.0) < 1e-15);
  CHECK(eigen_data(PhysParams{2, 1}, 1.0).degenerate);
  const EigenPair c = eigenvalues(PhysParams{1, 1}, 1.0);
  CHECK(std::abs(c.plus - cplx(0.5, std::sqrt(3.0) / 2)) < 1e-15);
  CHECK(std::abs(c.minus - cplx(0.5, -std::sqrt(3.0) / 2)) < 1e-15);
  for (cplx l : {c.plus, c.minus}) CHECK(std::abs(l * l - l + 1.0) < 1e-15);
}

TEST_CASE("characteristic identities over the sample grid") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double n : {0.5, 1.0, 2.0}) {
      const PhysParams p{alpha, n};
      for (double mu : mu_grid(p)) {
        for (double s : {1.0, -1.0}) {
          const EigenPair ev = eigenvalues(p, s * mu);
          CHECK(std::abs(ev.plus + ev.minus - alpha) <= 1e-12);
          CHECK(std::abs(ev.plus * ev.minus - n * n * mu * mu) <= 1e-12);
          for (cplx l : {ev.plus, ev.minus}) CHECK(std::abs(l * l - alpha * l + n * n * mu * mu) < 1e-13);
        }
      }
    }
  }
}

TEST_CASE("spectral projectors") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double n : {0.5, 1.0, 2.0}) {
      const PhysParams p{alpha, n};
      for (double mu : {0.0, 0.01, 0.2, 0.3, 0.9, 1.0}) {
        const EigenData d = eigen_data(p, mu);
        if (d.degenerate) continue;
        CAPTURE(alpha);
        CAPTURE(n);
        CAPTURE(mu);
        const Mat2& pp = d.proj_plus;
        const Mat2& pm = d.proj_minus;
        CHECK(max_abs_diff(pp + pm, Mat2::identity()) <= 1e-12);
        CHECK((pp * pm).max_abs() <= 1e-12);
        CHECK(max_abs_diff(pp * pp, pp) <= 1e-12);
        CHECK(max_abs_diff(pm * pm, pm) <= 1e-12);
        // Columns of each projector are eigenvectors: E P = lambda P.
        const Mat2 e = mode_generator(p, mu);
        CHECK(max_abs_diff(e * pm, d.lambda_minus * pm) <= 1e-12);
        CHECK(max_abs_diff(e * pp, d.lambda_plus * pp) <= 1e-12);
      }
    }
  }
}

TEST_CASE("slow eigenvalue expansion") {
  const PhysParams p{1, 1};
  const EigenPair a = eigen_expansion_slow(p, 0.0);
  CHECK(a.plus == cplx(1.0));
  CHECK(a.minus == cplx(0.0));
  const EigenPair b = eigen_expansion_slow(p, 0.1);
  CHECK(b.minus.real() == Approx(0.01).epsilon(1e-14));
  const double exact = (1 - std::sqrt(0.96)) / 2;
  CHECK(eigenvalues(p, 0.1).minus.real() == Approx(exact).epsilon(1e-14));
  CHECK(exact == Approx(0.0101021).epsilon(1e-6));
  const double r1 = std::abs(eigenvalues(p, 0.1).minus - eigen_expansion_slow(p, 0.1).minus);
  const double r2 = std::abs(eigenvalues(p, 0.05).minus - eigen_expansion_slow(p, 0.05).minus);
  CHECK(r1 / r2 >= 8.0);
  CHECK_THROWS_AS(eigen_expansion_slow(p, 0.5), RegimeError);
  CHECK_THROWS_AS(eigen_expansion_slow(PhysParams{0.0, 1.0}, 0.0), RegimeError);
}

TEST_CASE("exact propagator basics") {
  const PhysParams p{1.3, 0.8};
  for (double mu : {0.0, 0.2, 0.8125, 1.0}) CHECK(max_abs_diff(exact_mode_propagator(p, mu, 0.0), Mat2::identity()) == 0.0);
  for (double t : {0.5, 3.0, 40.0}) {
    const Mat2 g = exact_mode_propagator(p, 0.0, t);
    CHECK(max_abs_diff(g, Mat2::diag(1.0, std::exp(-1.3 * t))) <= 1e-15);
  }
  CHECK_THROWS_AS(exact_mode_propagator(p, 0.3, -1.0), DomainError);
  CHECK_THROWS_AS(exact_mode_propagator(p, 1.5, 1.0), RangeError);
}

TEST_CASE("propagator at -xi is the conjugate") {
  const PhysParams p{1.0, 1.7};
  for (double mu : {0.05, 0.29, 0.6, 1.0}) {
    for (double t : {0.3, 7.0}) {
      CHECK(max_abs_diff(exact_mode_propagator(p, -mu, t), exact_mode_propagator(p, mu, t).conj()) <= 1e-15);
    }
  }
}

TEST_CASE("propagator matches the stage-by-stage RK4 oracle") {
  const PhysParams p{1, 1};
  const Mat2 ref = oracle::rk4_stagewise(p, 0.3, 2.0, 1e-4);
  CHECK(max_abs_diff(exact_mode_propagator(p, 0.3, 2.0), ref) <= 1e-10);
  for (double alpha : {0.5, 2.0}) {
    for (double n : {0.5, 2.0}) {
      const PhysParams q{alpha, n};
      for (double mu : mu_grid(q)) {
        for (double t : {0.1, 1.0}) {
          CHECK(max_abs_diff(exact_mode_propagator(q, mu, t), oracle::rk4_stagewise(q, mu, t, 1e-4)) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("squared-step oracle agrees with stage-by-stage RK4") {
  for (double mu : {0.0, 0.3, 0.5, 1.0}) {
    const PhysParams p{1, 1};
    CHECK(max_abs_diff(oracle::rk4_power(p, mu, 1.0, 1e-4), oracle::rk4_stagewise(p, mu, 1.0, 1e-4)) <= 1e-12);
    CHECK(max_abs_diff(rk4_reference_propagator(p, mu, 1.0, 1e-4), oracle::rk4_power(p, mu, 1.0, 1e-4)) <= 1e-12);
  }
}

TEST_CASE("propagator exactness over the full sample grid") {
  double worst = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double n : {0.5, 1.0, 2.0}) {
      const PhysParams p{alpha, n};
      for (double mu : mu_grid(p)) {
        for (double t : {0.1, 1.0, 10.0, 100.0}) {
          worst = std::max(worst, max_abs_diff(exact_mode_propagator(p, mu, t), oracle::rk4_power(p, mu, t, 1e-4)));
        }
      }
    }
  }
  MESSAGE("max entry error against the oracle: " << worst);
  CHECK(worst <= 1e-9);
}

TEST_CASE("degenerate branch is continuous across the tolerance band") {
  for (const PhysParams& p : {PhysParams{1, 1}, PhysParams{2, 1.5}, PhysParams{0.5, 2}}) {
    const double tol = degeneracy_tolerance(p);
    const double n2 = p.bruntN * p.bruntN;
    const double a2 = p.alpha * p.alpha;
    const double mu_star = p.alpha / (2 * p.bruntN);
    const double inside = std::sqrt((a2 - 0.999 * tol) / (4 * n2));
    const double outside_real = std::sqrt((a2 - 1.001 * tol) / (4 * n2));
    const double outside_cplx = std::sqrt((a2 + 1.001 * tol) / (4 * n2));
    REQUIRE(eigen_data(p, inside).degenerate);
    REQUIRE(eigen_data(p, mu_star).degenerate);
    REQUIRE(!eigen_data(p, outside_real).degenerate);
    REQUIRE(!eigen_data(p, outside_cplx).degenerate);
    for (double t : {0.1, 1.0, 10.0, 100.0}) {
      const Mat2 g = exact_mode_propagator(p, inside, t);
      CHECK(max_abs_diff(g, exact_mode_propagator(p, outside_real, t)) <= 1e-8);
      CHECK(max_abs_diff(g, exact_mode_propagator(p, outside_cplx, t)) <= 1e-8);
    }
  }
}

TEST_CASE("projector expansion examples") {
  const PhysParams p{1, 1};
  for (int order : {0, 1, 2}) CHECK(max_abs_diff(projector_expansion(p, 0.0, order), Mat2::diag(1.0, 0.0)) == 0.0);
  const Mat2 e = projector_expansion(p, 0.1, 2);
  CHECK(max_abs_diff(e, Mat2{1.01, cplx(0, 0.1), cplx(0, 0.1), -0.01}) <= 1e-15);
  const Mat2 e1 = projector_expansion(p, 0.1, 1);
  CHECK(max_abs_diff(e1, Mat2{1.0, cplx(0, 0.1), cplx(0, 0.1), 0.0}) <= 1e-15);
  CHECK_THROWS_AS(projector_expansion(p, 0.6, 2), RegimeError);
  CHECK_THROWS_AS(projector_expansion(p, 0.1, 3), RangeError);
}

TEST_CASE("projector expansion remainder is third order") {
  const PhysParams p{1, 1};
  std::vector<double> defect;
  for (double mu : {0.2, 0.1, 0.05, 0.025}) {
    const Mat2 exact = (1.0 / (eigenvalues(p, mu).minus - eigenvalues(p, mu).plus)) *
                       (mode_generator(p, mu) - eigenvalues(p, mu).plus * Mat2::identity());
    defect.push_back(max_abs_diff(exact, projector_expansion(p, mu, 2)));
  }
  for (std::size_t i = 0; i + 1 < defect.size(); ++i) {
    const double ratio = defect[i] / defect[i + 1];
    CAPTURE(ratio);
    CHECK(ratio == Approx(8.0).epsilon(0.25));
  }
}

TEST_CASE("slow kernel examples") {
  const PhysParams p{1, 1};
  for (double t : {0.0, 1.0, 10.0}) CHECK(max_abs_diff(kernel_slow(p, kPi / 2, t), Mat2::diag(1.0, 0.0)) <= 1e-16);
  CHECK_THROWS_AS(kernel_slow(p, 0.0, 1.0), RegimeError);
  // At t = 0 the two terms reproduce the identity only to first order: the
  // complement lacks the (2,2) entry 1, so the defect there is 1 - 0 = 1.
  const Mat2 k0 = kernel_slow(p, kPi / 2 - 0.05, 0.0);
  const Mat2 defect = k0 - Mat2::identity();
  MESSAGE("kernel_slow(t=0) - I near pi/2: " << std::abs(defect.a11) << " " << std::abs(defect.a12) << " "
                                                << std::abs(defect.a22));
  CHECK(std::abs(defect.a12) <= 1e-15);
  CHECK(std::abs(defect.a22 + 1.0) <= 1e-15);
}

TEST_CASE("slow term of the kernel is O(mu^3) at fixed t") {
  const PhysParams p{1, 1};
  for (double t : {1.0, 10.0}) {
    std::vector<double> err;
    for (double c : {0.1, 0.05, 0.025, 0.0125}) {
      const EigenData d = eigen_data(p, c);
      const Mat2 slow_exact = std::exp(-d.lambda_minus * t) * d.proj_minus;
      const Mat2 slow_approx = std::exp(-c * c * t) * projector_expansion(p, c, 2);
      err.push_back(max_abs_diff(slow_exact, slow_approx));
    }
    for (std::size_t i = 0; i + 1 < err.size(); ++i) CHECK(err[i] / err[i + 1] >= 6.0);
  }
}

TEST_CASE("full slow-kernel defect is bounded by the slow remainder plus the fast envelope") {
  // |exact - kernel_slow| <= C (|c|^3 (1 + t c^2) + exp(-alpha t / 2)); the
  // fast part is not O(|c|^3) because the complement carries only first-order
  // off-diagonal terms and no (2,2) identity entry.
  const PhysParams p{1, 1};
  double worst = 0.0;
  for (double t : {0.0, 1.0, 10.0, 30.0}) {
    for (double c : {0.2, 0.1, 0.05, 0.02, 0.01, 0.001}) {
      const double theta = std::acos(c);
      const double d = max_abs_diff(exact_mode_propagator(p, c, t), kernel_slow(p, theta, t));
      worst = std::max(worst, d / (c * c * c * (1 + t * c * c) + std::exp(-0.5 * t)));
    }
  }
  MESSAGE("fitted C: " << worst);
  CHECK(worst <= 10.0);

  // The literal mu^3 (1 + t mu^2) bound fails at t = 10 for small mu.
  const double c = 0.01;
  const double d = max_abs_diff(exact_mode_propagator(p, c, 10.0), kernel_slow(p, std::acos(c), 10.0));
  MESSAGE("t=10, cos=0.01: defect " << d << " vs mu^3 " << c * c * c);
  CHECK(d > 10 * c * c * c);
}

TEST_CASE("fast regime envelope") {
  const PhysParams p{1, 1};
  double c_fit = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double mu = 0.9 + 0.005 * i;
    for (int j = 0; j <= 500; ++j) {
      const double t = 0.1 * j;
      const double g = exact_mode_propagator(p, mu, t).op_norm();
      c_fit = std::max(c_fit, g / ((1 + t) * std::exp(-0.5 * t)));
    }
  }
  CHECK(c_fit <= 10.0);
}

TEST_CASE("propagator norm bound C (1 + t) exp(-t min Re lambda)") {
  for (const PhysParams& p : {PhysParams{1, 1}, PhysParams{0.5, 2}, PhysParams{2, 0.5}}) {
    for (double mu : {0.05, 0.3, 0.7, 1.0}) {
      const EigenPair ev = eigenvalues(p, mu);
      const double rate = std::min(ev.plus.real(), ev.minus.real());
      double c = 0.0;
      for (int j = 0; j <= 400; ++j) {
        const double t = 0.25 * j;
        c = std::max(c, exact_mode_propagator(p, mu, t).op_norm() / ((1 + t) * std::exp(-rate * t)));
      }
      CAPTURE(mu);
      CHECK(c <= 2.0 + 4.0 * p.bruntN / p.alpha);
    }
  }
}

TEST_CASE("lattice evolution") {
  const Lattice lat(16, 16, 2 * kPi, 2 * kPi);
  RandomFieldSpec spec;
  spec.amplitude = 1.0;
  spec.dealias = false;
  const SpectralField b = random_field(lat, spec, 1);
  const SpectralField O = random_field(lat, spec, 2);
  const PhysParams p{0.8, 1.4};

  const LinearPair z = linear_evolve_lattice(b, O, p, 0.0);
  CHECK(max_abs_diff(z.b, b) == 0.0);
  CHECK(max_abs_diff(z.Omega, O) == 0.0);

  const LinearPair a = linear_evolve_lattice(b, O, p, 1.3);
  const LinearPair ab = linear_evolve_lattice(a.b, a.Omega, p, 2.1);
  const LinearPair c = linear_evolve_lattice(b, O, p, 3.4);
  CHECK(max_abs_diff(ab.b, c.b) <= 1e-11);
  CHECK(max_abs_diff(ab.Omega, c.Omega) <= 1e-11);
  CHECK(hermitian_defect(c.b) <= 1e-15);

  SpectralField line(lat);
  line.set({0, 3}, cplx(0.2, 0.1));
  line.set({0, 5}, cplx(-0.4, 0.0));
  const LinearPair l = linear_evolve_lattice(line, SpectralField(lat), p, 50.0);
  CHECK(max_abs_diff(l.b, line) == 0.0);
  CHECK(max_abs(l.Omega) == 0.0);

  const PhysParams undamped{0.0, 1.4};
  const double e0 = std::pow(sobolev_norm(b, 0, true), 2) + std::pow(sobolev_norm(O, 0, true), 2);
  for (double t : {1.0, 10.0, 100.0}) {
    const LinearPair u = linear_evolve_lattice(b, O, undamped, t);
    const double e = std::pow(sobolev_norm(u.b, 0, true), 2) + std::pow(sobolev_norm(u.Omega, 0, true), 2);
    CHECK(std::abs(e - e0) / e0 <= 1e-11);
  }

  CHECK_THROWS_AS(linear_evolve_lattice(b, SpectralField(Lattice(16, 16, 1, 1)), p, 1.0), LatticeMismatchError);
  CHECK_THROWS_AS(linear_evolve_lattice(b, O, p, -1.0), DomainError);
}
