#pragma once

#include "bsq/profile.hpp"
#include "bsq/spectral_field.hpp"

namespace bsq {

/// int_0^{2 pi} |cos theta|^k exp(-t cos^2 theta) d theta by adaptive
/// Gauss-Kronrod with panels refined toward pi/2 and 3pi/2. Relative accuracy
/// 1e-10, AccuracyError otherwise.
double angular_integral(int k, double t);

/// Large-t constant of angular_integral: value * t^((1+k)/2) -> 2 Gamma((k+1)/2).
double angular_limit_constant(int k);

/// int_0^t min{1, (t - tau)^-gamma} min{1, tau^-kappa} d tau for
/// 0 <= gamma, kappa < 1 and t >= 2, split at 1, t/2 and t - 1. Relative
/// accuracy 1e-8.
double bhn_integral(double gamma, double kappa, double t);

/// Predicted decay exponent phi = min{gamma, kappa, gamma + kappa - 1}; the
/// integral behaves like t^-phi.
double bhn_phi(double gamma, double kappa);

/// ||g||_{H^s} / (||g||_{H^s0}^theta ||g||_{H^s1}^(1-theta)),
/// theta = (s1 - s) / (s1 - s0). Bounded by 1 (Holder on the Fourier side).
double interpolation_ratio(const SpectralField& field, double s0, double s, double s1, bool homogeneous);

/// ||g||^2_{H^r} / (2^r (||g||^2_{dot H^-1} + ||g||^2_{dot H^r})) for mean-zero g.
double embedding_defect(const SpectralField& field, double r);

/// sup over dyadic radii of |profile(xi)| (1 + |xi|^m). EnvelopeError when the
/// envelope keeps growing over the outer dyadic samples.
double fourier_decay_envelope(const AnalyticProfile& profile, double m);

/// ||D^s (f g)|| / (||f||_inf ||D^s g|| + ||D^s f|| ||g||_inf), D^s = (-Delta)^(s/2),
/// with the product formed on a 2x zero-padded grid. Diagnostic only.
double bilinear_ratio(const SpectralField& f, const SpectralField& g, double s);

}  // namespace bsq
