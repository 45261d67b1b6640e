#include "bsq/simd/kernels.hpp"

#include <cassert>
#include <cmath>

namespace bsq::kernels::scalar {
namespace {

// Complex products are spelled out so the operation order matches the AVX2
// addsub formulation exactly.
void cmul_inplace(std::span<cplx> inout, std::span<const cplx> symbol) {
  assert(inout.size() == symbol.size());
  for (std::size_t i = 0; i < inout.size(); ++i) {
    const double a = inout[i].real(), b = inout[i].imag();
    const double c = symbol[i].real(), d = symbol[i].imag();
    inout[i] = cplx(a * c - b * d, b * c + a * d);
  }
}

void cmul(std::span<cplx> out, std::span<const cplx> in, std::span<const cplx> symbol) {
  assert(out.size() == in.size() && in.size() == symbol.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    const double a = in[i].real(), b = in[i].imag();
    const double c = symbol[i].real(), d = symbol[i].imag();
    out[i] = cplx(a * c - b * d, b * c + a * d);
  }
}

double weighted_sq_sum(std::span<const cplx> c, std::span<const double> weight) {
  assert(c.size() == weight.size());
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  const std::size_t n = c.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const double w0 = weight[i], w1 = weight[i + 1];
    const double r0 = c[i].real(), i0 = c[i].imag();
    const double r1 = c[i + 1].real(), i1 = c[i + 1].imag();
    s0 = s0 + w0 * (r0 * r0);
    s1 = s1 + w0 * (i0 * i0);
    s2 = s2 + w1 * (r1 * r1);
    s3 = s3 + w1 * (i1 * i1);
  }
  if (i < n) {
    const double r = c[i].real(), im = c[i].imag();
    s0 = s0 + weight[i] * (r * r);
    s1 = s1 + weight[i] * (im * im);
  }
  return (s0 + s1) + (s2 + s3);
}

void axpy(std::span<cplx> out, std::span<const cplx> x, double h, std::span<const cplx> k) {
  assert(out.size() == x.size() && x.size() == k.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = cplx(x[i].real() + h * k[i].real(), x[i].imag() + h * k[i].imag());
  }
}

void mul_add2(std::span<double> out, std::span<const double> a, std::span<const double> b,
              std::span<const double> c, std::span<const double> d) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i] + c[i] * d[i];
}

void mul(std::span<double> out, std::span<const double> a, std::span<const double> b) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
}

double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::fmax(m, std::fabs(v));
  return m;
}

}  // namespace

const KernelTable& table() {
  static const KernelTable t{"scalar", cmul_inplace, cmul, weighted_sq_sum, axpy, mul_add2, mul, max_abs};
  return t;
}

}  // namespace bsq::kernels::scalar
