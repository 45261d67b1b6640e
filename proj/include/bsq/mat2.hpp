#pragma once

#include <array>
#include <complex>

namespace bsq {

using cplx = std::complex<double>;

/// 2x2 complex matrix, row-major: [[a11, a12], [a21, a22]].
struct Mat2 {
  cplx a11{}, a12{}, a21{}, a22{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 diag(cplx d1, cplx d2) { return {d1, 0.0, 0.0, d2}; }

  cplx trace() const { return a11 + a22; }
  cplx det() const { return a11 * a22 - a12 * a21; }
  Mat2 conj() const { return {std::conj(a11), std::conj(a12), std::conj(a21), std::conj(a22)}; }

  /// Largest entry modulus.
  double max_abs() const;
  /// Spectral (operator 2-) norm.
  double op_norm() const;
  /// Frobenius norm.
  double frobenius() const;

  std::array<cplx, 2> apply(cplx x1, cplx x2) const { return {a11 * x1 + a12 * x2, a21 * x1 + a22 * x2}; }

  Mat2& operator+=(const Mat2& o);
  Mat2& operator-=(const Mat2& o);
  Mat2& operator*=(cplx s);
};

Mat2 operator+(Mat2 a, const Mat2& b);
Mat2 operator-(Mat2 a, const Mat2& b);
Mat2 operator*(cplx s, Mat2 a);
Mat2 operator*(const Mat2& a, const Mat2& b);

/// max |a_ij - b_ij|
double max_abs_diff(const Mat2& a, const Mat2& b);

}  // namespace bsq
