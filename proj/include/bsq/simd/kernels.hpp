#pragma once

// Data-parallel inner loops shared by the spectral operators and the solver.
//
// Every kernel has a scalar reference implementation (namespace `scalar`) and,
// on x86-64 builds, an AVX2 variant (namespace `avx2`). The free functions in
// `bsq::kernels` dispatch once, at first use, to the best variant the CPU
// supports. Setting BSQ_SIMD=scalar in the environment forces the reference
// path.
//
// Reductions use a fixed order on both paths: four interleaved partial sums
// over the (re, im) lanes of consecutive complex pairs, in storage order,
// with an odd tail element added to the first pair of lanes, combined as
// (s0 + s1) + (s2 + s3). The AVX2
// variant is compiled without FMA so both paths round identically.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace bsq::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;
  // inout[i] *= symbol[i]
  void (*cmul_inplace)(std::span<cplx> inout, std::span<const cplx> symbol);
  // out[i] = symbol[i] * in[i]
  void (*cmul)(std::span<cplx> out, std::span<const cplx> in, std::span<const cplx> symbol);
  // sum_i weight[i] * |c[i]|^2
  double (*weighted_sq_sum)(std::span<const cplx> c, std::span<const double> weight);
  // out[i] = x[i] + h * k[i]
  void (*axpy)(std::span<cplx> out, std::span<const cplx> x, double h, std::span<const cplx> k);
  // out[i] = a[i] * b[i] + c[i] * d[i]  (physical-space advection)
  void (*mul_add2)(std::span<double> out, std::span<const double> a, std::span<const double> b,
                   std::span<const double> c, std::span<const double> d);
  // out[i] = a[i] * b[i]
  void (*mul)(std::span<double> out, std::span<const double> a, std::span<const double> b);
  // max_i |a[i]|
  double (*max_abs)(std::span<const double> a);
};

namespace scalar {
const KernelTable& table();
}
#ifdef BSQ_HAVE_AVX2
namespace avx2 {
const KernelTable& table();
}
#endif

/// True when the running CPU can execute the AVX2 variant.
bool avx2_available();

/// The variant selected for this process.
const KernelTable& active();

inline void cmul_inplace(std::span<cplx> inout, std::span<const cplx> symbol) {
  active().cmul_inplace(inout, symbol);
}
inline void cmul(std::span<cplx> out, std::span<const cplx> in, std::span<const cplx> symbol) {
  active().cmul(out, in, symbol);
}
inline double weighted_sq_sum(std::span<const cplx> c, std::span<const double> weight) {
  return active().weighted_sq_sum(c, weight);
}
inline void axpy(std::span<cplx> out, std::span<const cplx> x, double h, std::span<const cplx> k) {
  active().axpy(out, x, h, k);
}
inline void mul_add2(std::span<double> out, std::span<const double> a, std::span<const double> b,
                     std::span<const double> c, std::span<const double> d) {
  active().mul_add2(out, a, b, c, d);
}
inline void mul(std::span<double> out, std::span<const double> a, std::span<const double> b) {
  active().mul(out, a, b);
}
inline double max_abs(std::span<const double> a) { return active().max_abs(a); }

}  // namespace bsq::kernels
