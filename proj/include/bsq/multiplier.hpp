#pragma once

#include <functional>
#include <vector>

#include "bsq/spectral_field.hpp"

namespace bsq {

/// Scalar Fourier symbol m(xi).
using Symbol = std::function<cplx(Vec2)>;

/// Round-off tolerance on the mean below which singular operators silently
/// project it out instead of raising GaugeError.
inline constexpr double kGaugeTolerance = 1e-13;

/// A Fourier multiplier tabulated on a lattice.
///
/// Symbols are sampled once at construction. On the Nyquist row and column the
/// table holds the average of m over the two alias representatives +-K, which
/// keeps real fields real for any symbol with m(-xi) = conj(m(xi)) (odd
/// derivatives vanish there). A singular multiplier is undefined at xi = 0: its
/// table entry there is 0 and applying it requires a mean-zero input.
class Multiplier {
 public:
  static Multiplier from_symbol(const Lattice& lattice, const Symbol& symbol, bool singular);

  static Multiplier identity(const Lattice& lattice);
  static Multiplier dx(const Lattice& lattice);                   // i xi1
  static Multiplier dy(const Lattice& lattice);                   // i xi2
  static Multiplier frac_laplacian(const Lattice& lattice, double s);  // |xi|^s, singular if s < 0
  static Multiplier inverse_laplacian(const Lattice& lattice);    // -|xi|^-2
  static Multiplier riesz(const Lattice& lattice);                // i xi1 / |xi| = (-Delta)^(-1/2) d_x
  static Multiplier dealias_mask(const Lattice& lattice);         // 2/3 rule

  const Lattice& lattice() const { return lattice_; }
  bool singular() const { return singular_; }
  std::span<const cplx> table() const { return table_; }

  /// Mode-wise product of two tables (operator composition).
  Multiplier operator*(const Multiplier& other) const;
  Multiplier operator*(double s) const;

  SpectralField apply(const SpectralField& field) const;
  void apply_in_place(SpectralField& field) const;
  /// out = m * field without allocating.
  void apply_into(const SpectralField& field, SpectralField& out) const;

 private:
  Multiplier(const Lattice& lattice, std::vector<cplx> table, bool singular)
      : lattice_(lattice), table_(std::move(table)), singular_(singular) {}

  void check_gauge(const SpectralField& field) const;

  Lattice lattice_;
  std::vector<cplx> table_;
  bool singular_;
};

SpectralField apply_multiplier(const SpectralField& field, const Multiplier& m);
SpectralField apply_multiplier(const SpectralField& field, const Symbol& symbol, bool singular);

/// True when mode (k, l) survives the 2/3 rule: 3|k| < nx and 3|l| < ny.
bool dealias_keeps(const Lattice& lattice, ModeIndex m);

}  // namespace bsq
