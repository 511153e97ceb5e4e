#include <cmath>
#include <vector>

#include "doctest.h"
#include "driftreg/errors.hpp"
#include "driftreg/registration.hpp"
#include "driftreg/rng.hpp"
#include "driftreg/simulator.hpp"
#include "test_util.hpp"

using namespace driftreg;

namespace {

FrameSequence noisy_sequence(const Frame& scene, MotionVector c, int k_count,
                             double snr_db, std::uint64_t seed) {
  SequenceParams params;
  params.k_count = k_count;
  params.c = c;
  params.noise.kind = NoiseKind::awgn;
  params.noise.snr_db = snr_db;
  params.seed = seed;
  return simulate_sequence(scene, params).frames;
}

}  // namespace

TEST_SUITE("registration") {

TEST_CASE("downsample by 1 is the identity") {
  const CorrelationSurface s(testutil::random_frame(6, 6, 60));
  CHECK(downsample_mod(s, 1).grid() == s.grid());
}

TEST_CASE("downsample by 2 wraps modularly on a 1-D view") {
  const CorrelationSurface s(Frame(1, 6, {10, 11, 12, 13, 14, 15}));
  const CorrelationSurface d = downsample_mod(s, 2);
  CHECK(d.grid().data() == std::vector<double>{10, 12, 14, 10, 12, 14});
}

TEST_CASE("downsample matches an index-by-index oracle") {
  const CorrelationSurface s(testutil::random_frame(8, 8, 61));
  const CorrelationSurface d = downsample_mod(s, 3);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      CHECK(d.raw(r, c) == s.raw((3 * r) % 8, (3 * c) % 8));
}

TEST_CASE("downsample rejects m < 1") {
  const CorrelationSurface s(Frame(4, 4, 1.0));
  CHECK_THROWS_AS(downsample_mod(s, 0), InvalidArgument);
  CHECK_THROWS_AS(downsample_zero_pad(s, -1), InvalidArgument);
}

TEST_CASE("zero-pad downsample drops displacements leaving the frame") {
  const CorrelationSurface s(Frame(1, 6, {10, 11, 12, 13, 14, 15}));
  const CorrelationSurface d = downsample_zero_pad(s, 2);
  // index 3 is the signed candidate -3, displacement -6 leaves the frame
  CHECK(d.grid().data() == std::vector<double>{10, 12, 14, 0, 12, 14});
}

TEST_CASE("noiseless drift is recovered exactly") {
  const Frame scene = testutil::random_frame(32, 32, 62);
  const FrameSequence seq = testutil::shifted_sequence(scene, {1, 2}, 4);
  const RegistrationResult r = ml_register(seq);
  CHECK(r.estimate == MotionVector{1, 2});
  CHECK(r.score == r.objective.at(r.estimate));
  CHECK_FALSE(r.range_limited);
}

TEST_CASE("noiseless recovery holds across random drifts within the bound") {
  const Frame scene = testutil::random_frame(24, 24, 63);
  Rng rng(64);
  for (int trial = 0; trial < 10; ++trial) {
    const int bound = 24 / (2 * 3);
    const MotionVector c{static_cast<int>(rng.uniform_int(-bound, bound)),
                         static_cast<int>(rng.uniform_int(-bound, bound))};
    const FrameSequence seq = testutil::shifted_sequence(scene, c, 3);
    CHECK(ml_register(seq).estimate == c);
  }
}

TEST_CASE("ml and brute-force cost agree on noisy sequences") {
  // 100 seeded trials, K in 3..5, 0 dB
  int trial = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int k_count = 3 + static_cast<int>(seed % 3);
    const Frame scene = testutil::random_frame(16, 16, 700 + seed);
    Rng rng(mix64(65, seed));
    const int bound = std::max(1, 16 / (2 * k_count));
    const MotionVector c{static_cast<int>(rng.uniform_int(-bound, bound)),
                         static_cast<int>(rng.uniform_int(-bound, bound))};
    const FrameSequence seq = noisy_sequence(scene, c, k_count, 0.0, seed);
    const RegistrationResult ml = ml_register(seq);
    const RegistrationResult brute = brute_force_cost_register(seq);
    CHECK(ml.estimate == brute.estimate);
    ++trial;
  }
  CHECK(trial == 100);
}

TEST_CASE("ml and direct evaluation produce the same surface") {
  const Frame scene = testutil::random_frame(12, 12, 66);
  const FrameSequence seq = noisy_sequence(scene, {1, -1}, 4, 0.0, 67);
  const SearchRange full{0, true};
  const RegistrationResult ml = ml_register(seq, full);
  const RegistrationResult direct = direct_register(seq, full);
  CHECK(ml.estimate == direct.estimate);
  CHECK(testutil::rel_error(direct.objective.grid(), ml.objective.grid()) < 1e-6);
}

TEST_CASE("direct evaluation with two frames is a plain cross-correlation") {
  const Frame a = testutil::random_frame(10, 10, 68);
  const Frame b = testutil::random_frame(10, 10, 69);
  const FrameSequence seq({a, b});
  const RegistrationResult direct = direct_register(seq, SearchRange{0, true});
  CHECK(testutil::rel_error(direct.objective.grid(),
                            testutil::spatial_correlate(a, b)) < 1e-9);
}

TEST_CASE("cost is zero at the true drift and positive elsewhere") {
  const Frame scene = testutil::random_frame(16, 16, 70);
  const FrameSequence seq = testutil::shifted_sequence(scene, {1, -2}, 3);
  const RegistrationResult r = brute_force_cost_register(seq, SearchRange{2, false});
  CHECK(r.estimate == MotionVector{1, -2});
  CHECK(std::fabs(r.score) < 1e-9);  // objective is -cost
  for (int dr = -2; dr <= 2; ++dr)
    for (int dc = -2; dc <= 2; ++dc)
      if (MotionVector{dr, dc} != MotionVector{1, -2})
        CHECK(-r.objective.at({dr, dc}) > 1e-3);
}

TEST_CASE("two identical frames have zero cost at zero drift") {
  const Frame a = testutil::random_frame(8, 8, 71);
  const FrameSequence seq({a, a});
  const RegistrationResult r = brute_force_cost_register(seq);
  CHECK(r.estimate == MotionVector{0, 0});
  CHECK(r.score == 0.0);
}

TEST_CASE("cost and correlation objective are affinely related") {
  const Frame scene = testutil::random_frame(12, 12, 72);
  const int k_count = 3;
  const FrameSequence seq = noisy_sequence(scene, {1, 0}, k_count, 0.0, 73);
  const SearchRange full{0, true};
  const RegistrationResult direct = direct_register(seq, full);
  const RegistrationResult brute = brute_force_cost_register(seq, full);

  // cost(c) + (2/K) * objective(c) should be constant across candidates
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, scale = 0.0;
  for (int r = 0; r < 12; ++r) {
    for (int c = 0; c < 12; ++c) {
      const double cost = -brute.objective.raw(r, c);
      const double combined = cost + (2.0 / k_count) * direct.objective.raw(r, c);
      lo = std::min(lo, combined);
      hi = std::max(hi, combined);
      scale = std::max(scale, std::fabs(cost));
    }
  }
  CHECK((hi - lo) / scale < 1e-9);
}

TEST_CASE("pre-translating frames shifts the estimate") {
  const Frame scene = testutil::random_frame(32, 32, 74);
  const MotionVector c{1, -1}, delta{1, 1};
  std::vector<Frame> shifted;
  for (int k = 1; k <= 4; ++k)
    shifted.push_back(translate(translate(scene, c * k), delta * k));
  const RegistrationResult r = ml_register(FrameSequence(std::move(shifted)));
  CHECK(r.estimate == c + delta);
}

TEST_CASE("scaling intensities leaves the estimate alone and scales the score") {
  const Frame scene = testutil::random_frame(16, 16, 75);
  const FrameSequence seq = noisy_sequence(scene, {0, 1}, 3, 5.0, 76);
  std::vector<Frame> scaled_frames;
  for (const Frame& f : seq.frames()) {
    Frame g = f;
    for (double& v : g.data()) v *= 3.0;
    scaled_frames.push_back(std::move(g));
  }
  const RegistrationResult base = ml_register(seq);
  const RegistrationResult scaled = ml_register(FrameSequence(std::move(scaled_frames)));
  CHECK(scaled.estimate == base.estimate);
  CHECK(scaled.score == doctest::Approx(9.0 * base.score).epsilon(1e-12));
}

TEST_CASE("registration is deterministic") {
  const Frame scene = testutil::random_frame(16, 16, 77);
  const FrameSequence seq = noisy_sequence(scene, {1, 1}, 3, -5.0, 78);
  const RegistrationResult a = ml_register(seq);
  const RegistrationResult b = ml_register(seq);
  CHECK(a.estimate == b.estimate);
  CHECK(a.score == b.score);
  CHECK(a.objective.grid() == b.objective.grid());
}

TEST_CASE("all-zero frames are rejected") {
  const FrameSequence seq({Frame(8, 8), Frame(8, 8)});
  CHECK_THROWS_AS(ml_register(seq), NumericalError);
  CHECK_THROWS_AS(direct_register(seq), NumericalError);
  CHECK_THROWS_AS(brute_force_cost_register(seq), NumericalError);
}

TEST_CASE("flat surfaces break ties toward the smallest candidate") {
  const FrameSequence seq({Frame(8, 8, 1.0), Frame(8, 8, 1.0)});
  const int bound = 8 / (2 * 2);
  for (const RegistrationResult& r :
       {ml_register(seq), direct_register(seq), brute_force_cost_register(seq)}) {
    CHECK(r.estimate == MotionVector{-bound, -bound});
  }
}

TEST_CASE("estimates outside the range are flagged as range-limited") {
  SynthSpec spec;
  spec.rows = spec.cols = 32;
  spec.blob_count = 1;
  spec.sigma_min = spec.sigma_max = 4.0;  // smooth, decaying autocorrelation
  spec.background = 0.0;
  const Frame scene = make_synthetic_scene(spec);
  const FrameSequence seq = testutil::shifted_sequence(scene, {5, 0}, 3);
  const RegistrationResult r = ml_register(seq, SearchRange{3, false});
  CHECK(r.range_limited);
  CHECK(std::abs(r.estimate.drow) <= 3);
  CHECK(std::abs(r.estimate.dcol) <= 3);
}

TEST_CASE("search ranges wider than half the frame are rejected") {
  const Frame scene = testutil::random_frame(8, 8, 79);
  const FrameSequence seq = testutil::shifted_sequence(scene, {1, 0}, 2);
  CHECK_THROWS_AS(ml_register(seq, SearchRange{5, false}), InvalidArgument);
}

TEST_CASE("zero-pad and modular downsampling agree within the alias-free zone") {
  const Frame scene = testutil::random_frame(32, 32, 80);
  const FrameSequence seq = noisy_sequence(scene, {1, -1}, 3, 10.0, 81);
  RegisterOptions zp;
  zp.downsample = DownsampleMode::zero_pad;
  const RegistrationResult a = ml_register(seq);
  const RegistrationResult b = ml_register(seq, SearchRange{}, zp);
  // max m*c here is 2*5 < 32, so no group is zeroed and results coincide
  CHECK(a.estimate == b.estimate);
}

}  // TEST_SUITE
