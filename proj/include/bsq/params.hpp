#pragma once

namespace bsq {

/// Physical constants of the damped Boussinesq system.
///
/// `alpha` is the velocity damping rate and `bruntN` the Brunt-Vaisala
/// frequency, both in 1/time. The undamped limit alpha = 0 is accepted so the
/// conservative system can be simulated; everything that needs a strictly
/// positive damping (slow-regime expansions) checks for it separately.
struct PhysParams {
  double alpha = 1.0;
  double bruntN = 1.0;

  /// Throws RangeError unless alpha >= 0 and bruntN > 0 (both finite).
  void validate() const;
};

}  // namespace bsq
