#include "driftreg/baseline.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "driftreg/errors.hpp"
#include "driftreg/spectral.hpp"

namespace driftreg {

namespace {

// round(num/den) with exact halves toward zero; den > 0
long round_half_toward_zero(long num, long den) {
  const bool neg = num < 0;
  const unsigned long a = static_cast<unsigned long>(neg ? -num : num);
  const unsigned long d = static_cast<unsigned long>(den);
  unsigned long q = a / d;
  const unsigned long r = a % d;
  if (2 * r > d) ++q;
  const long signed_q = static_cast<long>(q);
  return neg ? -signed_q : signed_q;
}

int project_component(std::vector<int> values, ProjectionKind kind) {
  if (kind == ProjectionKind::mean) {
    long sum = 0;
    for (int v : values) sum += v;
    return static_cast<int>(
        round_half_toward_zero(sum, static_cast<long>(values.size())));
  }
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return static_cast<int>(
      round_half_toward_zero(static_cast<long>(values[n / 2 - 1]) + values[n / 2], 2));
}

}  // namespace

PairwiseOffsets pairwise_register(const FrameSequence& seq, const SearchRange& range,
                                  const RegisterOptions& opts) {
  const int rows = seq.rows(), cols = seq.cols(), k_count = seq.count();

  // same resolved bound as the joint estimator, for a like-for-like search
  SearchRange resolved = range;
  if (!resolved.full_range && resolved.max_drift == 0)
    resolved.max_drift = std::max(1, std::min(rows, cols) / (2 * k_count));

  const int row_lo = resolved.full_range ? -(rows / 2) : -resolved.max_drift;
  const int row_hi = resolved.full_range ? (rows - 1) / 2 : resolved.max_drift;
  const int col_lo = resolved.full_range ? -(cols / 2) : -resolved.max_drift;
  const int col_hi = resolved.full_range ? (cols - 1) / 2 : resolved.max_drift;
  if (!resolved.full_range && resolved.max_drift > std::min(rows, cols) / 2)
    throw InvalidArgument("SearchRange: max_drift exceeds half the frame");

  PairwiseOffsets result;
  result.offsets.reserve(k_count - 1);
  result.peak_scores.reserve(k_count - 1);
  for (int k = 0; k + 1 < k_count; ++k) {
    Frame a = seq[k];
    Frame b = seq[k + 1];
    if (opts.mean_subtract) {
      const double ma = a.mean(), mb = b.mean();
      for (double& v : a.data()) v -= ma;
      for (double& v : b.data()) v -= mb;
    }
    const CorrelationSurface surface = cross_correlate(a, b);
    MotionVector best{row_lo, col_lo};
    double best_value = -std::numeric_limits<double>::infinity();
    for (int r = row_lo; r <= row_hi; ++r) {
      for (int c = col_lo; c <= col_hi; ++c) {
        const double v = surface.at({r, c});
        if (v > best_value) {
          best_value = v;
          best = {r, c};
        }
      }
    }
    result.offsets.push_back(best);
    result.peak_scores.push_back(best_value);
  }
  return result;
}

MotionVector project_constant(const PairwiseOffsets& offsets, ProjectionKind kind) {
  if (offsets.offsets.empty())
    throw InvalidArgument("project_constant: no offsets");
  std::vector<int> rows_v, cols_v;
  rows_v.reserve(offsets.offsets.size());
  cols_v.reserve(offsets.offsets.size());
  for (const MotionVector& v : offsets.offsets) {
    rows_v.push_back(v.drow);
    cols_v.push_back(v.dcol);
  }
  return {project_component(std::move(rows_v), kind),
          project_component(std::move(cols_v), kind)};
}

}  // namespace driftreg
