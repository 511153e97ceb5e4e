#pragma once

#include <complex>
#include <vector>

#include "driftreg/frame.hpp"

namespace driftreg {

// 2-D DFT of a Frame, same dims, row-major.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::complex<double>& operator()(int r, int c) { return data_[idx(r, c)]; }
  const std::complex<double>& operator()(int r, int c) const { return data_[idx(r, c)]; }

  std::vector<std::complex<double>>& data() { return data_; }
  const std::vector<std::complex<double>>& data() const { return data_; }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::complex<double>> data_;
};

// Real grid indexed by circular displacement: at({dr,dc}) wraps mod dims.
class CorrelationSurface {
 public:
  CorrelationSurface() = default;
  explicit CorrelationSurface(Frame grid) : grid_(std::move(grid)) {}
  CorrelationSurface(int rows, int cols) : grid_(rows, cols) {}

  int rows() const { return grid_.rows(); }
  int cols() const { return grid_.cols(); }

  double at(const MotionVector& d) const { return grid_.wrapped(d.drow, d.dcol); }
  double& raw(int r, int c) { return grid_(r, c); }
  double raw(int r, int c) const { return grid_(r, c); }

  Frame& grid() { return grid_; }
  const Frame& grid() const { return grid_; }

 private:
  Frame grid_;
};

// Unnormalized forward 2-D DFT. Safe to call concurrently.
Spectrum forward_dft(const Frame& frame);

// Inverse DFT with 1/(rows*cols) normalization; returns the real part.
// The imaginary residue of spectra built from real frames is numerical noise.
Frame inverse_dft(const Spectrum& spectrum);

// Circular cross-correlation: surface[d] = sum_n a[n] * b[(n+d) mod dims],
// computed as inverse_dft(conj(A) .* B). Throws InvalidArgument on dims
// mismatch.
CorrelationSurface cross_correlate(const Frame& a, const Frame& b);

// Correlation group S_m: inverse_dft( sum_{k=1}^{K-m} conj(Y_k) .* Y_{k+m} )
// with a single inverse transform. Requires 1 <= m <= K-1.
CorrelationSurface group_sum_surface(const std::vector<Spectrum>& spectra, int m);

}  // namespace driftreg
