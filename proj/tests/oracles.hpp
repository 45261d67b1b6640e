#pragma once

// Reference computations used only by the tests. Each one is written from the
// defining formula, without calling the library routine it is compared with.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "bsq/mat2.hpp"
#include "bsq/params.hpp"

namespace oracle {

using cplx = std::complex<double>;
using bsq::Mat2;

inline Mat2 generator(const bsq::PhysParams& p, double mu) {
  const cplx c(0.0, -p.bruntN * mu);
  return {0.0, c, c, p.alpha};
}

// dY/dt = -E Y integrated stage by stage, n steps of size h.
inline Mat2 rk4_steps(const bsq::PhysParams& p, double mu, double h, long n) {
  const Mat2 a = cplx(-1.0) * generator(p, mu);
  Mat2 y = Mat2::identity();
  for (long i = 0; i < n; ++i) {
    const Mat2 k1 = a * y;
    const Mat2 k2 = a * (y + cplx(0.5 * h) * k1);
    const Mat2 k3 = a * (y + cplx(0.5 * h) * k2);
    const Mat2 k4 = a * (y + cplx(h) * k3);
    y = y + cplx(h / 6.0) * (k1 + cplx(2.0) * k2 + cplx(2.0) * k3 + k4);
  }
  return y;
}

// Step-doubled RK4 with Richardson combination (16 Y_{h/2} - Y_h) / 15.
// t must be an integer multiple of dt.
inline Mat2 rk4_stagewise(const bsq::PhysParams& p, double mu, double t, double dt) {
  const long n = std::lround(t / dt);
  const Mat2 coarse = rk4_steps(p, mu, dt, n);
  const Mat2 fine = rk4_steps(p, mu, 0.5 * dt, 2 * n);
  return cplx(1.0 / 15.0) * (cplx(16.0) * fine - coarse);
}

// Same scheme, with the n-fold product of the one-step matrix taken by repeated
// squaring. The one-step matrix is built from four explicit stages applied to
// the identity.
inline Mat2 rk4_power(const bsq::PhysParams& p, double mu, double t, double dt) {
  auto run = [&](double h, long n) {
    Mat2 m = rk4_steps(p, mu, h, 1);
    Mat2 acc = Mat2::identity();
    while (n > 0) {
      if (n & 1) acc = m * acc;
      m = m * m;
      n >>= 1;
    }
    return acc;
  };
  const long n = std::lround(t / dt);
  return cplx(1.0 / 15.0) * (cplx(16.0) * run(0.5 * dt, 2 * n) - run(dt, n));
}

// Angular integral int_0^{2 pi} |cos|^k exp(-t cos^2) for large t through the
// substitution s = sqrt(t) cos(theta):
//   4 t^{-(k+1)/2} int_0^{sqrt t} s^k exp(-s^2) / sqrt(1 - s^2 / t) ds,
// by composite Simpson on a dense uniform grid. The integrand is cut at s = 40
// (exp(-1600) underflows), so t must exceed 1600 to keep the endpoint
// singularity out of range.
inline double angular_brute(int k, double t, int intervals = 400000) {
  const double upper = 40.0;
  const double h = upper / intervals;
  auto f = [&](double s) { return std::pow(s, k) * std::exp(-s * s) / std::sqrt(1.0 - s * s / t); };
  double sum = f(0.0) + f(upper);
  for (int i = 1; i < intervals; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return 4.0 * std::pow(t, -0.5 * (k + 1)) * sum * h / 3.0;
}

// Midpoint rule for int_{R^2} w(xi) g(xi) d xi on the square [-L, L]^2.
template <class F>
double cartesian_integral(F&& g, double L, int n) {
  const double h = 2.0 * L / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = -L + (i + 0.5) * h;
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += g(x, -L + (j + 0.5) * h);
    sum += row;
  }
  return sum * h * h;
}

// Direct 2-D DFT coefficient c(k, l) = (1 / (nx ny)) sum g(i, j) e^{-2 pi i (k i / nx + l j / ny)}.
inline cplx dft_coeff(const std::vector<double>& g, int nx, int ny, int k, int l) {
  cplx acc = 0.0;
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const double ph = -2.0 * std::numbers::pi * (static_cast<double>(k) * i / nx + static_cast<double>(l) * j / ny);
      acc += g[static_cast<std::size_t>(i) * ny + j] * cplx(std::cos(ph), std::sin(ph));
    }
  }
  return acc / static_cast<double>(nx * ny);
}

}  // namespace oracle
