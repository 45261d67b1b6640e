#pragma once

#include <cstddef>

namespace bsq {

/// Signed lattice mode index (k, l) with k in [-nx/2, nx/2), l in [-ny/2, ny/2).
struct ModeIndex {
  int k = 0;
  int l = 0;
  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

/// A frequency vector xi = (xi1, xi2).
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

double norm(Vec2 v);

/// Periodic box [0, lx) x [0, ly) sampled with nx x ny points.
///
/// Spectral data of real fields is stored in the half-spectrum layout produced
/// by a real-to-complex FFT: `rows() == nx` rows in FFT order
/// (0, 1, ..., nx/2-1, -nx/2, ..., -1) and `cols() == ny/2 + 1` columns with
/// l = 0, ..., ny/2 - 1 followed by the Nyquist column, which represents
/// l = -ny/2. Modes with l < 0 are the conjugates of stored ones.
class Lattice {
 public:
  Lattice(int nx, int ny, double lx, double ly);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double lx() const { return lx_; }
  double ly() const { return ly_; }

  int rows() const { return nx_; }
  int cols() const { return ny_ / 2 + 1; }
  std::size_t spectral_size() const { return static_cast<std::size_t>(rows()) * cols(); }
  std::size_t physical_size() const { return static_cast<std::size_t>(nx_) * ny_; }
  double area() const { return lx_ * ly_; }

  int k_of_row(int row) const { return row < nx_ / 2 ? row : row - nx_; }
  int l_of_col(int col) const { return col == ny_ / 2 ? -ny_ / 2 : col; }
  int row_of_k(int k) const { return k >= 0 ? k : k + nx_; }
  std::size_t offset(int row, int col) const { return static_cast<std::size_t>(row) * cols() + col; }

  bool contains(ModeIndex m) const {
    return m.k >= -nx_ / 2 && m.k < nx_ / 2 && m.l >= -ny_ / 2 && m.l < ny_ / 2;
  }

  /// Frequency at a storage position.
  Vec2 xi_at(int row, int col) const;

  /// Number of full-lattice modes a stored entry stands for (1 on the l = 0 and
  /// Nyquist columns, 2 elsewhere).
  double multiplicity(int col) const { return (col == 0 || col == ny_ / 2) ? 1.0 : 2.0; }

  bool is_nyquist_row(int row) const { return row == nx_ / 2; }
  bool is_nyquist_col(int col) const { return col == ny_ / 2; }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  int nx_;
  int ny_;
  double lx_;
  double ly_;
};

/// xi = (2 pi k / lx, 2 pi l / ly). Throws RangeError outside the lattice.
Vec2 wavenumber(const Lattice& lattice, ModeIndex index);

/// mu = xi1 / |xi|, with mu = 0 at the origin.
double riesz_ratio(Vec2 xi);

}  // namespace bsq
