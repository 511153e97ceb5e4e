#include "driftreg/registration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "driftreg/errors.hpp"

namespace driftreg {

namespace {

inline int floor_mod(long a, int m) {
  long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

struct ResolvedRange {
  int row_lo, row_hi, col_lo, col_hi;  // inclusive candidate bounds
  int bound;                           // 0 when full
  bool full;
};

ResolvedRange resolve_range(const SearchRange& range, int rows, int cols, int k_count) {
  if (range.full_range) {
    // canonical residue range [-dim/2, dim/2)
    return {-(rows / 2), (rows - 1) / 2, -(cols / 2), (cols - 1) / 2, 0, true};
  }
  int bound = range.max_drift;
  if (bound == 0) bound = std::max(1, std::min(rows, cols) / (2 * k_count));
  if (bound < 0) throw InvalidArgument("SearchRange: max_drift must be positive");
  if (bound > std::min(rows, cols) / 2)
    throw InvalidArgument("SearchRange: max_drift exceeds half the frame");
  return {-bound, bound, -bound, bound, bound, false};
}

void validate_sequence(const FrameSequence& seq) {
  double max_abs = 0.0;
  for (const Frame& f : seq.frames()) {
    if (!f.all_finite()) throw InvalidArgument("register: non-finite sample in frame");
    for (double v : f.data()) max_abs = std::max(max_abs, std::fabs(v));
  }
  if (max_abs == 0.0)
    throw NumericalError("register: all frames are zero, argmax undefined");
}

std::vector<Frame> preprocess(const FrameSequence& seq, const RegisterOptions& opts) {
  std::vector<Frame> frames = seq.frames();
  if (opts.mean_subtract) {
    for (Frame& f : frames) {
      const double m = f.mean();
      for (double& v : f.data()) v -= m;
    }
  }
  return frames;
}

// Row-major argmax over candidates; strict > keeps the lexicographically
// smallest candidate on ties.
RegistrationResult pick_argmax(CorrelationSurface objective, const ResolvedRange& rr) {
  MotionVector best{rr.row_lo, rr.col_lo};
  double best_value = -std::numeric_limits<double>::infinity();
  for (int r = rr.row_lo; r <= rr.row_hi; ++r) {
    for (int c = rr.col_lo; c <= rr.col_hi; ++c) {
      const double v = objective.at({r, c});
      if (v > best_value) {
        best_value = v;
        best = {r, c};
      }
    }
  }
  RegistrationResult result;
  result.estimate = best;
  result.score = best_value;
  result.objective = std::move(objective);
  result.full_range = rr.full;
  result.bound = rr.bound;
  result.range_limited =
      !rr.full && (std::abs(best.drow) == rr.bound || std::abs(best.dcol) == rr.bound);
  return result;
}

void add_downsampled(Frame& acc, const CorrelationSurface& s, int m, DownsampleMode mode) {
  const int rows = acc.rows(), cols = acc.cols();
  for (int i = 0; i < rows; ++i) {
    // signed residue of the candidate this raw index represents
    const int ci = i >= (rows + 1) / 2 ? i - rows : i;
    const int sr = floor_mod(static_cast<long>(m) * i, rows);
    const bool row_ok = std::abs(static_cast<long>(m) * ci) < rows;
    for (int j = 0; j < cols; ++j) {
      const int cj = j >= (cols + 1) / 2 ? j - cols : j;
      if (mode == DownsampleMode::zero_pad &&
          !(row_ok && std::abs(static_cast<long>(m) * cj) < cols))
        continue;
      acc(i, j) += s.raw(sr, floor_mod(static_cast<long>(m) * j, cols));
    }
  }
}

}  // namespace

CorrelationSurface downsample_mod(const CorrelationSurface& surface, int m) {
  if (m < 1) throw InvalidArgument("downsample_mod: m must be >= 1");
  Frame out(surface.rows(), surface.cols());
  add_downsampled(out, surface, m, DownsampleMode::modular);
  return CorrelationSurface(std::move(out));
}

CorrelationSurface downsample_zero_pad(const CorrelationSurface& surface, int m) {
  if (m < 1) throw InvalidArgument("downsample_zero_pad: m must be >= 1");
  Frame out(surface.rows(), surface.cols());
  add_downsampled(out, surface, m, DownsampleMode::zero_pad);
  return CorrelationSurface(std::move(out));
}

RegistrationResult ml_register(const FrameSequence& seq, const SearchRange& range,
                               const RegisterOptions& opts) {
  validate_sequence(seq);
  const int rows = seq.rows(), cols = seq.cols(), k_count = seq.count();
  const ResolvedRange rr = resolve_range(range, rows, cols, k_count);

  const std::vector<Frame> frames = preprocess(seq, opts);
  std::vector<Spectrum> spectra;
  spectra.reserve(frames.size());
  for (const Frame& f : frames) spectra.push_back(forward_dft(f));

  Frame acc(rows, cols);
  for (int m = 1; m <= k_count - 1; ++m) {
    const CorrelationSurface group = group_sum_surface(spectra, m);
    add_downsampled(acc, group, m, opts.downsample);
  }
  return pick_argmax(CorrelationSurface(std::move(acc)), rr);
}

RegistrationResult direct_register(const FrameSequence& seq, const SearchRange& range,
                                   const RegisterOptions& opts) {
  validate_sequence(seq);
  const int rows = seq.rows(), cols = seq.cols(), k_count = seq.count();
  const ResolvedRange rr = resolve_range(range, rows, cols, k_count);
  const std::vector<Frame> frames = preprocess(seq, opts);

  Frame obj(rows, cols);
  for (int cr = rr.row_lo; cr <= rr.row_hi; ++cr) {
    for (int cc = rr.col_lo; cc <= rr.col_hi; ++cc) {
      double value = 0.0;
      for (int m = 1; m <= k_count - 1; ++m) {
        const long dr = static_cast<long>(m) * cr;
        const long dc = static_cast<long>(m) * cc;
        if (opts.downsample == DownsampleMode::zero_pad &&
            (std::abs(dr) >= rows || std::abs(dc) >= cols))
          continue;
        const int sr = floor_mod(dr, rows);
        const int sc = floor_mod(dc, cols);
        for (int k = 0; k + m < k_count; ++k) {
          const Frame& a = frames[k];
          const Frame& b = frames[k + m];
          double dot = 0.0;
          for (int r = 0; r < rows; ++r) {
            const int br = r + sr >= rows ? r + sr - rows : r + sr;
            for (int c = 0; c < cols; ++c) {
              const int bc = c + sc >= cols ? c + sc - cols : c + sc;
              dot += a(r, c) * b(br, bc);
            }
          }
          value += dot;
        }
      }
      obj(floor_mod(cr, rows), floor_mod(cc, cols)) = value;
    }
  }
  return pick_argmax(CorrelationSurface(std::move(obj)), rr);
}

RegistrationResult brute_force_cost_register(const FrameSequence& seq,
                                             const SearchRange& range,
                                             const RegisterOptions& opts) {
  validate_sequence(seq);
  const int rows = seq.rows(), cols = seq.cols(), k_count = seq.count();
  const ResolvedRange rr = resolve_range(range, rows, cols, k_count);
  const std::vector<Frame> frames = preprocess(seq, opts);
  const std::size_t n = frames.front().size();

  Frame obj(rows, cols);
  for (int cr = rr.row_lo; cr <= rr.row_hi; ++cr) {
    for (int cc = rr.col_lo; cc <= rr.col_hi; ++cc) {
      // motion-corrected frames and their mean
      std::vector<Frame> corrected;
      corrected.reserve(frames.size());
      for (int k = 0; k < k_count; ++k)
        corrected.push_back(
            translate(frames[k], MotionVector{cr, cc} * -(k + 1)));
      Frame mu(rows, cols);
      for (const Frame& f : corrected)
        for (std::size_t i = 0; i < n; ++i) mu.data()[i] += f.data()[i];
      for (std::size_t i = 0; i < n; ++i) mu.data()[i] /= k_count;

      // translation permutes samples, so the residual against mu can be
      // summed in corrected coordinates
      double cost = 0.0;
      for (const Frame& f : corrected) {
        for (std::size_t i = 0; i < n; ++i) {
          const double d = f.data()[i] - mu.data()[i];
          cost += d * d;
        }
      }
      obj(floor_mod(cr, rows), floor_mod(cc, cols)) = -cost;
    }
  }
  return pick_argmax(CorrelationSurface(std::move(obj)), rr);
}

}  // namespace driftreg
