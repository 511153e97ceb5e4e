#pragma once

#include "driftreg/frame.hpp"
#include "driftreg/spectral.hpp"

namespace driftreg {

// Candidate drift bound. max_drift = 0 resolves to the default
// max(1, floor(min(rows, cols) / (2K))), which keeps the total drift of K
// frames under half a frame so circular wrap-around cannot alias the peak.
struct SearchRange {
  int max_drift = 0;
  bool full_range = false;
};

// Semantics of the per-group downsample D_m.
//   modular:  output[c] = surface[(m*c) mod dims]  (exact under the circular
//             translation model; the default)
//   zero_pad: candidates whose unwrapped displacement m*c leaves the frame
//             contribute 0 for that group
enum class DownsampleMode { modular, zero_pad };

struct RegisterOptions {
  DownsampleMode downsample = DownsampleMode::modular;
  // Subtract each frame's mean before correlating.
  bool mean_subtract = false;
};

struct RegistrationResult {
  MotionVector estimate;            // canonical residues
  double score = 0.0;               // objective value at the estimate
  CorrelationSurface objective;     // candidate c stored at index (c mod dims);
                                    // higher is better on every path
  bool range_limited = false;       // estimate sits on the search-range boundary
  int bound = 0;                    // resolved max_drift (0 when full_range)
  bool full_range = false;
};

// D_m with modular indexing: output[c] = surface[(m*c) mod dims], same shape.
CorrelationSurface downsample_mod(const CorrelationSurface& surface, int m);

// D_m with literal zero padding: entries whose signed displacement m*c has a
// component with |m*c| >= dim are set to 0 instead of wrapping.
CorrelationSurface downsample_zero_pad(const CorrelationSurface& surface, int m);

// Fast maximum-likelihood estimator of the constant interframe drift:
// FFT each frame, sum cross-power groups by separation m, inverse-transform,
// downsample each group by m, sum, and take the argmax over candidates in
// range. Deterministic tie-break: lexicographically smallest (rows, cols)
// candidate over canonical residues.
RegistrationResult ml_register(const FrameSequence& seq,
                               const SearchRange& range = {},
                               const RegisterOptions& opts = {});

// Literal spatial-domain evaluation of the same objective, candidate by
// candidate. O(N^4 K^2) over a full range; intended for small instances
// (N <= 32). Only candidates within range are evaluated; the rest of the
// surface stays 0.
RegistrationResult direct_register(const FrameSequence& seq,
                                   const SearchRange& range = {},
                                   const RegisterOptions& opts = {});

// Least-squares anchor oracle: for each candidate c, forms the motion-
// corrected mean mu = (1/K) sum_k T_{-kc}(y_k) and evaluates the residual
// cost sum_k ||y_k - T_{kc}(mu)||^2. The stored objective is -cost so all
// paths maximize. Small instances only.
RegistrationResult brute_force_cost_register(const FrameSequence& seq,
                                             const SearchRange& range = {},
                                             const RegisterOptions& opts = {});

}  // namespace driftreg
