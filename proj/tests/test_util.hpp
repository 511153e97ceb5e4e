#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "driftreg/frame.hpp"
#include "driftreg/rng.hpp"
#include "driftreg/spectral.hpp"

namespace testutil {

inline driftreg::Frame random_frame(int rows, int cols, std::uint64_t seed,
                                    double lo = 0.0, double hi = 1.0) {
  driftreg::Rng rng(seed);
  driftreg::Frame f(rows, cols);
  for (double& v : f.data()) v = rng.uniform_real(lo, hi);
  return f;
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

// max |a-b| scaled by max |b| (or 1 if b is tiny)
inline double rel_error(const driftreg::Frame& a, const driftreg::Frame& b) {
  REQUIRE(a.same_dims(b));
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    diff = std::max(diff, std::fabs(a.data()[i] - b.data()[i]));
  const double scale = std::max(max_abs(b.data()), 1e-300);
  return diff / std::max(scale, 1.0e-12);
}

// Naive O(N^4) DFT, the independent oracle for forward_dft.
inline driftreg::Spectrum naive_dft(const driftreg::Frame& f) {
  const int rows = f.rows(), cols = f.cols();
  driftreg::Spectrum out(rows, cols);
  for (int u = 0; u < rows; ++u) {
    for (int v = 0; v < cols; ++v) {
      std::complex<double> acc = 0.0;
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          const double phase =
              -2.0 * M_PI * (static_cast<double>(u) * r / rows +
                             static_cast<double>(v) * c / cols);
          acc += f(r, c) * std::complex<double>(std::cos(phase), std::sin(phase));
        }
      }
      out(u, v) = acc;
    }
  }
  return out;
}

// Spatial-domain circular correlation, the oracle for cross_correlate.
inline driftreg::Frame spatial_correlate(const driftreg::Frame& a,
                                         const driftreg::Frame& b) {
  const int rows = a.rows(), cols = a.cols();
  driftreg::Frame out(rows, cols);
  for (int dr = 0; dr < rows; ++dr) {
    for (int dc = 0; dc < cols; ++dc) {
      double acc = 0.0;
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
          acc += a(r, c) * b((r + dr) % rows, (c + dc) % cols);
      out(dr, dc) = acc;
    }
  }
  return out;
}

// Noiseless sequence y_k = translate(scene, k*c), k = 1..K.
inline driftreg::FrameSequence shifted_sequence(const driftreg::Frame& scene,
                                                driftreg::MotionVector c, int k_count) {
  std::vector<driftreg::Frame> frames;
  frames.reserve(k_count);
  for (int k = 1; k <= k_count; ++k)
    frames.push_back(driftreg::translate(scene, c * k));
  return driftreg::FrameSequence(std::move(frames));
}

}  // namespace testutil
