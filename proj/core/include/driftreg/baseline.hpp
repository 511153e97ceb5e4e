#pragma once

#include <vector>

#include "driftreg/frame.hpp"
#include "driftreg/registration.hpp"

namespace driftreg {

// Estimated displacement between each consecutive frame pair.
struct PairwiseOffsets {
  std::vector<MotionVector> offsets;  // offsets[k]: frame k+1 -> frame k+2, K-1 entries
  std::vector<double> peak_scores;    // correlation peak value per pair
};

// Whole-pixel correlation-peak registration of each consecutive pair,
// restricted to the same candidate range and tie-break rule as ml_register.
PairwiseOffsets pairwise_register(const FrameSequence& seq,
                                  const SearchRange& range = {},
                                  const RegisterOptions& opts = {});

enum class ProjectionKind { mean, median };

// Projects the K-1 pairwise offsets onto a single constant drift: the
// componentwise mean (least-squares) or median, rounded to the nearest
// integer with exact halves toward zero.
MotionVector project_constant(const PairwiseOffsets& offsets,
                              ProjectionKind kind = ProjectionKind::mean);

}  // namespace driftreg
