#pragma once

#include <string>

#include "bsq/lattice.hpp"

namespace bsq {

/// Closed-form Fourier-side datum g^(xi), evaluable at any continuous frequency.
///
/// All families are radial in rho = |xi|:
///   gaussian             A exp(-rho^2 / w^2)
///   ring_gaussian        A exp(-(rho - R)^2 / w^2)
///   polynomial_gaussian  A rho^p exp(-rho^2 / w^2)
///   algebraic            A (1 + rho)^(-p)
/// The algebraic family has only finite Fourier decay and stands in for data
/// with limited W^{s,1} regularity.
struct AnalyticProfile {
  enum class Kind { gaussian, ring_gaussian, polynomial_gaussian, algebraic };

  Kind kind = Kind::gaussian;
  double amplitude = 1.0;
  double width = 1.0;   // w
  double radius = 0.0;  // R, ring_gaussian only
  double power = 0.0;   // p, polynomial_gaussian and algebraic

  static AnalyticProfile gaussian(double amplitude, double width);
  static AnalyticProfile zero() { return gaussian(0.0, 1.0); }

  void validate() const;

  double radial(double rho) const;
  double operator()(Vec2 xi) const { return radial(norm(xi)); }

  bool super_algebraic() const { return kind != Kind::algebraic; }

  /// Constant C with |g^(xi)| <= C (1 + |xi|)^(-m) for every xi, or +inf when
  /// no such constant exists (algebraic profiles with m > p).
  double decay_bound(double m) const;

  /// Radius beyond which g^(rho)^2 rho^q e^(...) is negligible: the smallest
  /// R past the profile peak with |g(R)| (1 + R)^(q/2 + 1) <= tol * sup|g|.
  /// Only meaningful for super-algebraic families.
  double truncation_radius(double q, double tol) const;

  static Kind parse_kind(const std::string& name);
  static std::string kind_name(Kind kind);
};

}  // namespace bsq
