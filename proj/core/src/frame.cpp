#include "driftreg/frame.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace driftreg {

namespace {

// Nonnegative residue of a mod m (m > 0).
inline long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

MotionVector canonical(const MotionVector& v, int rows, int cols) {
  auto reduce = [](int x, int dim) {
    long r = floor_mod(x, dim);          // [0, dim)
    if (r >= (dim + 1) / 2) r -= dim;    // [-dim/2, dim/2)
    return static_cast<int>(r);
  };
  if (rows <= 0 || cols <= 0) throw InvalidArgument("canonical: empty dims");
  return {reduce(v.drow, rows), reduce(v.dcol, cols)};
}

Frame::Frame(int rows, int cols, double value)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, value) {
  if (rows <= 0 || cols <= 0) throw InvalidArgument("Frame: dims must be positive");
  if (!std::isfinite(value)) throw InvalidArgument("Frame: non-finite fill value");
}

Frame::Frame(int rows, int cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows <= 0 || cols <= 0) throw InvalidArgument("Frame: dims must be positive");
  if (data_.size() != static_cast<std::size_t>(rows) * cols)
    throw InvalidArgument("Frame: data size does not match dims");
  if (!all_finite()) throw InvalidArgument("Frame: non-finite sample");
}

double Frame::wrapped(long r, long c) const {
  return data_[static_cast<std::size_t>(floor_mod(r, rows_)) * cols_ +
               floor_mod(c, cols_)];
}

bool Frame::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

double Frame::mean() const {
  double s = 0.0;
  for (double v : data_) s += v;
  return s / static_cast<double>(data_.size());
}

double Frame::variance() const {
  const double m = mean();
  double s = 0.0;
  for (double v : data_) s += (v - m) * (v - m);
  return s / static_cast<double>(data_.size());
}

FrameSequence::FrameSequence(std::vector<Frame> frames) : frames_(std::move(frames)) {
  if (frames_.size() < 2)
    throw InvalidArgument("FrameSequence: need at least 2 frames");
  for (const Frame& f : frames_) {
    if (!f.same_dims(frames_.front()))
      throw InvalidArgument("FrameSequence: frames must share dims");
  }
}

Frame translate(const Frame& frame, const MotionVector& shift) {
  const int rows = frame.rows(), cols = frame.cols();
  const int dr = static_cast<int>(floor_mod(shift.drow, rows));
  const int dc = static_cast<int>(floor_mod(shift.dcol, cols));
  Frame out(rows, cols);
  const double* src = frame.data().data();
  double* dst = out.data().data();
  for (int r = 0; r < rows; ++r) {
    // out row r comes from input row (r - dr) mod rows, rotated right by dc
    const double* in_row = src + static_cast<std::size_t>((r - dr + rows) % rows) * cols;
    double* out_row = dst + static_cast<std::size_t>(r) * cols;
    std::memcpy(out_row + dc, in_row, (cols - dc) * sizeof(double));
    std::memcpy(out_row, in_row + (cols - dc), dc * sizeof(double));
  }
  return out;
}

double snr_to_sigma(const Frame& scene, double snr_db) {
  const double var = scene.variance();
  if (!(var > 0.0))
    throw InvalidArgument("snr_to_sigma: scene is constant, SNR undefined");
  return std::sqrt(var / std::pow(10.0, snr_db / 10.0));
}

double registration_error(const MotionVector& true_c, const MotionVector& est_c,
                          ErrorMetric metric) {
  const double dr = std::abs(true_c.drow - est_c.drow);
  const double dc = std::abs(true_c.dcol - est_c.dcol);
  switch (metric) {
    case ErrorMetric::mean_abs:
      return (dr + dc) / 2.0;
    case ErrorMetric::euclidean:
      return std::hypot(dr, dc);
  }
  throw InvalidArgument("registration_error: unknown metric");
}

}  // namespace driftreg
