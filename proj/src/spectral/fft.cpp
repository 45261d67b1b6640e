#include "bsq/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>

#include "bsq/errors.hpp"

namespace bsq {

struct FftPlan::Impl {
  explicit Impl(const Lattice& lat) : lattice(lat) {
    real_buf = fftw_alloc_real(lat.physical_size());
    cplx_buf = fftw_alloc_complex(lat.spectral_size());
    forward = fftw_plan_dft_r2c_2d(lat.nx(), lat.ny(), real_buf, cplx_buf, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_2d(lat.nx(), lat.ny(), cplx_buf, real_buf, FFTW_ESTIMATE);
    if (forward == nullptr || backward == nullptr) throw Error("FFTW plan creation failed");
  }
  ~Impl() {
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
    fftw_free(real_buf);
    fftw_free(cplx_buf);
  }
  Impl(const Impl&) = delete;
  Impl& operator=(const Impl&) = delete;

  Lattice lattice;
  double* real_buf = nullptr;
  fftw_complex* cplx_buf = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

FftPlan::FftPlan(const Lattice& lattice) : impl_(std::make_unique<Impl>(lattice)) {}
FftPlan::~FftPlan() = default;
FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;

const Lattice& FftPlan::lattice() const { return impl_->lattice; }

void FftPlan::to_physical(const SpectralField& field, std::span<double> out) {
  const Lattice& lat = impl_->lattice;
  if (!(field.lattice() == lat)) throw LatticeMismatchError("field does not match FFT plan lattice");
  if (out.size() != lat.physical_size()) throw RangeError("physical buffer has wrong size");
  // c2r overwrites its input, so work on a copy.
  std::memcpy(impl_->cplx_buf, field.coeffs().data(), lat.spectral_size() * sizeof(fftw_complex));
  fftw_execute(impl_->backward);
  std::copy_n(impl_->real_buf, lat.physical_size(), out.begin());
}

void FftPlan::to_spectral(std::span<const double> samples, SpectralField& out) {
  const Lattice& lat = impl_->lattice;
  if (!(out.lattice() == lat)) throw LatticeMismatchError("field does not match FFT plan lattice");
  if (samples.size() != lat.physical_size()) throw RangeError("physical buffer has wrong size");
  std::copy(samples.begin(), samples.end(), impl_->real_buf);
  fftw_execute(impl_->forward);
  const double scale = 1.0 / static_cast<double>(lat.physical_size());
  auto* dst = out.coeffs().data();
  for (std::size_t i = 0; i < lat.spectral_size(); ++i) {
    dst[i] = cplx(impl_->cplx_buf[i][0] * scale, impl_->cplx_buf[i][1] * scale);
  }
}

}  // namespace bsq
