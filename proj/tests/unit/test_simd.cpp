#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string_view>
#include <vector>

#include "bsq/simd/kernels.hpp"

using bsq::kernels::cplx;
using bsq::kernels::KernelTable;

namespace {

const std::size_t kLengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 33, 1000, 1027};

std::vector<cplx> random_cplx(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<cplx> v(n);
  for (auto& x : v) x = {u(rng), u(rng)};
  return v;
}

std::vector<double> random_real(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

// Every table must reproduce the scalar reference bit for bit.
void compare_tables(const KernelTable& ref, const KernelTable& cand) {
  std::mt19937_64 rng(42);
  for (std::size_t n : kLengths) {
    CAPTURE(n);
    const auto a = random_cplx(n, rng), b = random_cplx(n, rng);
    const auto w = random_real(n, rng);

    auto x1 = a, x2 = a;
    ref.cmul_inplace(x1, b);
    cand.cmul_inplace(x2, b);
    CHECK(x1 == x2);

    std::vector<cplx> o1(n), o2(n);
    ref.cmul(o1, a, b);
    cand.cmul(o2, a, b);
    CHECK(o1 == o2);
    CHECK(o1 == x1);

    CHECK(ref.weighted_sq_sum(a, w) == cand.weighted_sq_sum(a, w));

    ref.axpy(o1, a, 0.37, b);
    cand.axpy(o2, a, 0.37, b);
    CHECK(o1 == o2);

    const auto p = random_real(n, rng), q = random_real(n, rng), r = random_real(n, rng), s = random_real(n, rng);
    std::vector<double> d1(n), d2(n);
    ref.mul_add2(d1, p, q, r, s);
    cand.mul_add2(d2, p, q, r, s);
    CHECK(d1 == d2);
    ref.mul(d1, p, q);
    cand.mul(d2, p, q);
    CHECK(d1 == d2);
    CHECK(ref.max_abs(p) == cand.max_abs(p));
  }
}

}  // namespace

TEST_CASE("scalar kernels match their definitions") {
  const KernelTable& k = bsq::kernels::scalar::table();
  std::vector<cplx> a{{1, 2}, {3, -1}, {0.5, 0.25}};
  const std::vector<cplx> b{{2, 0}, {0, 1}, {-1, 1}};
  std::vector<cplx> out(3);
  k.cmul(out, a, b);
  CHECK(out[0] == cplx(2, 4));
  CHECK(out[1] == cplx(1, 3));
  CHECK(out[2] == cplx(-0.75, 0.25));

  const std::vector<double> w{1.0, 2.0, 0.5};
  // 1*5 + 2*10 + 0.5*0.3125
  CHECK(k.weighted_sq_sum(a, w) == doctest::Approx(25.15625).epsilon(1e-15));

  k.axpy(out, a, 2.0, b);
  CHECK(out[1] == cplx(3, 1));

  const std::vector<double> p{-4.0, 1.0, 3.5};
  CHECK(k.max_abs(p) == 4.0);
  CHECK(k.max_abs(std::vector<double>{}) == 0.0);
}

TEST_CASE("reduction order is the documented four-lane tree") {
  // Lane sums: s0 holds 1e16 and absorbs its small terms, s2 and s3 collect
  // 1.5 between them. A left-to-right sum would absorb every small term.
  const std::vector<cplx> c{{1e8, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}};
  const std::vector<double> w{1.0, 0.75, 0.75, 0.75, 0.75};
  double s0 = 1e16, s1 = 0.0, s2 = 0.75, s3 = 0.0;
  s0 = s0 + 0.75;
  s3 = s3 + 0.75;
  s0 = s0 + 0.75;  // odd tail element, lanes s0 and s1
  const double expected = (s0 + s1) + (s2 + s3);
  double sequential = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) sequential += w[i] * std::norm(c[i]);
  REQUIRE(expected != sequential);
  CHECK(bsq::kernels::scalar::table().weighted_sq_sum(c, w) == expected);
}

TEST_CASE("active table is the AVX2 variant unless forced to scalar") {
  const char* forced = std::getenv("BSQ_SIMD");
  const std::string_view name = bsq::kernels::active().name;
  if (forced && std::string_view(forced) == "scalar") {
    CHECK(name == "scalar");
  } else if (bsq::kernels::avx2_available()) {
    CHECK(name == "avx2");
  } else {
    CHECK(name == "scalar");
  }
  MESSAGE("active kernels: " << name);
}

#ifdef BSQ_HAVE_AVX2
TEST_CASE("avx2 kernels are bit-identical to the scalar reference") {
  if (!bsq::kernels::avx2_available()) {
    MESSAGE("CPU without AVX2, skipping");
    return;
  }
  compare_tables(bsq::kernels::scalar::table(), bsq::kernels::avx2::table());
}
#endif

TEST_CASE("dispatch wrappers agree with the scalar reference") {
  compare_tables(bsq::kernels::scalar::table(), bsq::kernels::active());
}
