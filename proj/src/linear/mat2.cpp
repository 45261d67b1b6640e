#include "bsq/mat2.hpp"

#include <algorithm>
#include <cmath>

namespace bsq {

double Mat2::max_abs() const {
  return std::max({std::abs(a11), std::abs(a12), std::abs(a21), std::abs(a22)});
}

double Mat2::frobenius() const {
  return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22));
}

double Mat2::op_norm() const {
  const double f2 = std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22);
  const double d = std::abs(det());
  const double disc = std::max(0.0, f2 * f2 - 4.0 * d * d);
  return std::sqrt(0.5 * (f2 + std::sqrt(disc)));
}

Mat2& Mat2::operator+=(const Mat2& o) {
  a11 += o.a11; a12 += o.a12; a21 += o.a21; a22 += o.a22;
  return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) {
  a11 -= o.a11; a12 -= o.a12; a21 -= o.a21; a22 -= o.a22;
  return *this;
}

Mat2& Mat2::operator*=(cplx s) {
  a11 *= s; a12 *= s; a21 *= s; a22 *= s;
  return *this;
}

Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
Mat2 operator*(cplx s, Mat2 a) { return a *= s; }

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

double max_abs_diff(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

}  // namespace bsq
