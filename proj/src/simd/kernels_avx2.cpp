#include "bsq/simd/kernels.hpp"

#include <immintrin.h>

#include <cassert>
#include <cmath>

namespace bsq::kernels::avx2 {
namespace {

// Two complex doubles per 256-bit register: [re0, im0, re1, im1].
inline __m256d cmul2(__m256d x, __m256d y) {
  const __m256d yre = _mm256_movedup_pd(y);           // c0 c0 c1 c1
  const __m256d yim = _mm256_permute_pd(y, 0b1111);   // d0 d0 d1 d1
  const __m256d xsw = _mm256_permute_pd(x, 0b0101);   // b0 a0 b1 a1
  return _mm256_addsub_pd(_mm256_mul_pd(x, yre), _mm256_mul_pd(xsw, yim));
}

inline cplx cmul1(cplx x, cplx y) {
  const double a = x.real(), b = x.imag(), c = y.real(), d = y.imag();
  return cplx(a * c - b * d, b * c + a * d);
}

void cmul_inplace(std::span<cplx> inout, std::span<const cplx> symbol) {
  assert(inout.size() == symbol.size());
  const std::size_t n = inout.size();
  auto* p = reinterpret_cast<double*>(inout.data());
  const auto* s = reinterpret_cast<const double*>(symbol.data());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    _mm256_storeu_pd(p + 2 * i, cmul2(_mm256_loadu_pd(p + 2 * i), _mm256_loadu_pd(s + 2 * i)));
  }
  if (i < n) inout[i] = cmul1(inout[i], symbol[i]);
}

void cmul(std::span<cplx> out, std::span<const cplx> in, std::span<const cplx> symbol) {
  assert(out.size() == in.size() && in.size() == symbol.size());
  const std::size_t n = in.size();
  auto* o = reinterpret_cast<double*>(out.data());
  const auto* x = reinterpret_cast<const double*>(in.data());
  const auto* s = reinterpret_cast<const double*>(symbol.data());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    _mm256_storeu_pd(o + 2 * i, cmul2(_mm256_loadu_pd(x + 2 * i), _mm256_loadu_pd(s + 2 * i)));
  }
  if (i < n) out[i] = cmul1(in[i], symbol[i]);
}

double weighted_sq_sum(std::span<const cplx> c, std::span<const double> weight) {
  assert(c.size() == weight.size());
  const std::size_t n = c.size();
  const auto* x = reinterpret_cast<const double*>(c.data());
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(x + 2 * i);
    const __m128d w2 = _mm_loadu_pd(weight.data() + i);                  // w0 w1
    const __m256d w = _mm256_permute4x64_pd(_mm256_castpd128_pd256(w2), 0b01010000);  // w0 w0 w1 w1
    acc = _mm256_add_pd(acc, _mm256_mul_pd(w, _mm256_mul_pd(v, v)));
  }
  alignas(32) double s[4];
  _mm256_store_pd(s, acc);
  if (i < n) {
    const double r = c[i].real(), im = c[i].imag();
    s[0] = s[0] + weight[i] * (r * r);
    s[1] = s[1] + weight[i] * (im * im);
  }
  return (s[0] + s[1]) + (s[2] + s[3]);
}

void axpy(std::span<cplx> out, std::span<const cplx> x, double h, std::span<const cplx> k) {
  assert(out.size() == x.size() && x.size() == k.size());
  const std::size_t n = 2 * x.size();
  auto* o = reinterpret_cast<double*>(out.data());
  const auto* xp = reinterpret_cast<const double*>(x.data());
  const auto* kp = reinterpret_cast<const double*>(k.data());
  const __m256d hv = _mm256_set1_pd(h);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(o + i, _mm256_add_pd(_mm256_loadu_pd(xp + i), _mm256_mul_pd(hv, _mm256_loadu_pd(kp + i))));
  }
  for (; i < n; ++i) o[i] = xp[i] + h * kp[i];
}

void mul_add2(std::span<double> out, std::span<const double> a, std::span<const double> b,
              std::span<const double> c, std::span<const double> d) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i));
    const __m256d cd = _mm256_mul_pd(_mm256_loadu_pd(c.data() + i), _mm256_loadu_pd(d.data() + i));
    _mm256_storeu_pd(out.data() + i, _mm256_add_pd(ab, cd));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i] + c[i] * d[i];
}

void mul(std::span<double> out, std::span<const double> a, std::span<const double> b) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out.data() + i,
                     _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

double max_abs(std::span<const double> a) {
  const std::size_t n = a.size();
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) m = _mm256_max_pd(m, _mm256_andnot_pd(sign, _mm256_loadu_pd(a.data() + i)));
  alignas(32) double s[4];
  _mm256_store_pd(s, m);
  double r = std::fmax(std::fmax(s[0], s[1]), std::fmax(s[2], s[3]));
  for (; i < n; ++i) r = std::fmax(r, std::fabs(a[i]));
  return r;
}

}  // namespace

const KernelTable& table() {
  static const KernelTable t{"avx2", cmul_inplace, cmul, weighted_sq_sum, axpy, mul_add2, mul, max_abs};
  return t;
}

}  // namespace bsq::kernels::avx2
