#pragma once

#include <cstdint>
#include <vector>

#include "driftreg/errors.hpp"

namespace driftreg {

// Integer per-frame drift in pixels. Components may be any integers; use
// canonical() to reduce against a frame size when comparing estimates.
struct MotionVector {
  int drow = 0;
  int dcol = 0;

  friend bool operator==(const MotionVector&, const MotionVector&) = default;

  MotionVector operator*(int k) const { return {drow * k, dcol * k}; }
  MotionVector operator-() const { return {-drow, -dcol}; }
  MotionVector operator+(const MotionVector& o) const {
    return {drow + o.drow, dcol + o.dcol};
  }
};

// Reduces v componentwise into the canonical residue range [-dim/2, dim/2).
MotionVector canonical(const MotionVector& v, int rows, int cols);

// One real-valued image grid, row-major, double precision.
class Frame {
 public:
  Frame() = default;
  Frame(int rows, int cols, double value = 0.0);
  // Takes ownership of `data`; throws InvalidArgument if the size does not
  // match rows*cols or any sample is non-finite.
  Frame(int rows, int cols, std::vector<double> data);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(int r, int c) { return data_[idx(r, c)]; }
  double operator()(int r, int c) const { return data_[idx(r, c)]; }

  // Circular indexing; accepts any integer coordinates.
  double wrapped(long r, long c) const;

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_dims(const Frame& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }
  bool all_finite() const;

  double mean() const;
  // Population variance (divides by the sample count).
  double variance() const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Ordered sequence of K >= 2 frames with identical dims. Frame at position
// i (0-based) is the observation y_{i+1}; the model offsets it by (i+1)*c.
class FrameSequence {
 public:
  explicit FrameSequence(std::vector<Frame> frames);

  int count() const { return static_cast<int>(frames_.size()); }
  const Frame& operator[](int i) const { return frames_[i]; }
  const std::vector<Frame>& frames() const { return frames_; }
  int rows() const { return frames_.front().rows(); }
  int cols() const { return frames_.front().cols(); }

 private:
  std::vector<Frame> frames_;
};

enum class NoiseKind { awgn, poisson };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::awgn;
  double snr_db = 0.0;          // awgn only; +inf means noiseless
  double photon_scale = 1e3;    // poisson only; expected counts per unit intensity
  std::uint64_t seed = 0;
};

// Circular translation: out[n] = frame[(n - shift) mod dims].
Frame translate(const Frame& frame, const MotionVector& shift);

// Noise level for a target SNR: sigma^2 = var(scene) / 10^(snr_db/10).
// Throws InvalidArgument for a constant scene.
double snr_to_sigma(const Frame& scene, double snr_db);

enum class ErrorMetric { mean_abs, euclidean };

// Registration error between canonical-residue motion vectors:
// mean_abs = (|drow| + |dcol|)/2, euclidean = sqrt(drow^2 + dcol^2).
double registration_error(const MotionVector& true_c, const MotionVector& est_c,
                          ErrorMetric metric = ErrorMetric::mean_abs);

}  // namespace driftreg
