#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bsq/params.hpp"
#include "bsq/profile.hpp"
#include "bsq/sobolev.hpp"

namespace bsq {

/// Which solution component a continuous norm measures.
enum class Component { b, Omega };

/// ( int (1 + rho^2)^r [rho^2 cos^2 | rho^2 sin^2 | 1] |component|^2 dxi )^(1/2)
struct NormDescriptor {
  Component component = Component::b;
  double r = 0.0;
  DerivWeight deriv = DerivWeight::none;

  /// e.g. "H1_b", "H0_dx_Omega".
  std::string label() const;
};

/// Composite Gauss-Legendre tensor grid in polar frequency coordinates.
///
/// Angular panels are geometrically graded toward theta = pi/2 and 3pi/2,
/// where the slow kernel concentrates in a band of width ~ t^(-1/2). Radial
/// panels cover (0, R_max]; for profiles with algebraic decay the last panel
/// maps [R_split, inf) onto (0, 1] through rho = R_split / u.
class PolarQuadGrid {
 public:
  struct Panel {
    double lo;
    double hi;
  };

  /// Grid able to resolve times up to t_max for the given profiles and norm.
  static PolarQuadGrid build(const PhysParams& params, double t_max, const std::vector<AnalyticProfile>& profiles,
                             const NormDescriptor& norm, int order = 16);

  int order() const { return order_; }
  const std::vector<Panel>& angular_panels() const { return angular_; }
  const std::vector<Panel>& radial_panels() const { return radial_; }
  /// Start of the mapped tail (rho = tail_start / u), or 0 when there is none.
  double tail_start() const { return tail_start_; }
  /// Width of the panel straddling each critical angle.
  double critical_panel_width() const { return critical_width_; }

  struct Nodes {
    std::vector<double> x;
    std::vector<double> w;
  };
  /// Angular and radial nodes/weights for an n-point rule on every panel. The
  /// radial weights include the Jacobian of the tail map.
  Nodes angular_nodes(int n) const;
  Nodes radial_nodes(int n) const;

 private:
  int order_ = 16;
  std::vector<Panel> angular_;
  std::vector<Panel> radial_;
  double tail_start_ = 0.0;
  double critical_width_ = 0.0;
};

/// Continuous-frequency norm of the linear solution with data (b0^, Omega0^),
/// evaluated on `grid` with the exact propagator. The same integral with a
/// half-order rule on the same panels serves as an a posteriori error
/// estimate; AccuracyError is raised when they differ by more than 1%.
double linear_norm_quadrature(const AnalyticProfile& b0, const AnalyticProfile& Omega0, const PhysParams& params,
                              double t, const NormDescriptor& norm, const PolarQuadGrid& grid);

/// Sum of `values` by a fixed pairwise tree (blocks of 8 at the leaves).
double pairwise_sum(std::span<const double> values);

}  // namespace bsq
