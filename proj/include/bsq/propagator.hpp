#pragma once

#include <complex>

#include "bsq/mat2.hpp"
#include "bsq/params.hpp"

namespace bsq {

/// E(i mu) = B + i mu A = [[0, -i N mu], [-i N mu, alpha]]. The Fourier-side
/// linear system for (b^, Omega^) is d/dt U = -E(i mu) U.
Mat2 mode_generator(const PhysParams& params, double mu);

struct EigenPair {
  cplx plus;   // alpha/2 + sqrt(disc)/2
  cplx minus;  // alpha/2 - sqrt(disc)/2
};

/// Roots of lambda^2 - alpha lambda + N^2 mu^2, principal square root of the
/// discriminant alpha^2 - 4 N^2 mu^2.
EigenPair eigenvalues(const PhysParams& params, double mu);

/// Discriminant alpha^2 - 4 N^2 mu^2.
double discriminant(const PhysParams& params, double mu);

/// Discriminants within this band use the Jordan-form propagator.
double degeneracy_tolerance(const PhysParams& params);

struct EigenData {
  cplx lambda_plus;
  cplx lambda_minus;
  Mat2 proj_plus;   // (E - lambda_minus) / (lambda_plus - lambda_minus)
  Mat2 proj_minus;  // (E - lambda_plus) / (lambda_minus - lambda_plus); the slow projector
  bool degenerate = false;
};

/// Eigenvalues and spectral projectors of E(i mu). In the degenerate case the
/// projectors are left zero and `degenerate` is set.
EigenData eigen_data(const PhysParams& params, double mu);

/// Green kernel exp(-E(i mu) t) at one frequency direction.
///
/// Distinct eigenvalues: exp(-lambda_- t) P_- + exp(-lambda_+ t) P_+.
/// |disc| <= degeneracy_tolerance: exp(-lambda t) (I - t (E - lambda I)),
/// lambda = alpha / 2. Throws DomainError for t < 0 and RangeError for |mu| > 1.
Mat2 exact_mode_propagator(const PhysParams& params, double mu, double t);

}  // namespace bsq
