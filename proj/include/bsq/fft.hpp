#pragma once

#include <memory>
#include <span>

#include "bsq/spectral_field.hpp"

namespace bsq {

/// Real <-> half-spectrum transforms for one lattice, backed by FFTW.
///
/// Plans are created with FFTW_ESTIMATE so that the chosen algorithm, and
/// therefore every rounding, is identical from run to run. Physical samples are
/// row-major with the x index outer: g[i * ny + j] = g(i lx / nx, j ly / ny).
/// An instance owns scratch buffers and is not safe to share between threads.
class FftPlan {
 public:
  explicit FftPlan(const Lattice& lattice);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;
  FftPlan(FftPlan&&) noexcept;
  FftPlan& operator=(FftPlan&&) noexcept;

  const Lattice& lattice() const;

  /// Physical samples of a field. `out` must hold lattice().physical_size() values.
  void to_physical(const SpectralField& field, std::span<double> out);

  /// Fourier coefficients of physical samples, including the 1/(nx ny) factor.
  void to_spectral(std::span<const double> samples, SpectralField& out);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace bsq
