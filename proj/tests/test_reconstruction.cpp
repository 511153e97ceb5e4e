#include <cmath>

#include "doctest.h"
#include "driftreg/reconstruction.hpp"
#include "driftreg/rng.hpp"
#include "test_util.hpp"

using namespace driftreg;

namespace {

double mse(const Frame& a, const Frame& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a.data()[i] - b.data()[i];
    acc += d * d;
  }
  return acc / static_cast<double>(a.size());
}

}  // namespace

TEST_SUITE("reconstruction") {

TEST_CASE("coadding a noiseless sequence with the true drift restores the scene") {
  const Frame scene = testutil::random_frame(32, 32, 90);
  const MotionVector c{2, -3};
  const FrameSequence seq = testutil::shifted_sequence(scene, c, 5);
  const Frame recon = coadd(seq, c);
  CHECK(testutil::rel_error(recon, scene) < 1e-12);
}

TEST_CASE("coadding with a wrong drift is strictly worse") {
  const Frame scene = testutil::random_frame(32, 32, 91);
  const MotionVector c{1, -2};
  const FrameSequence seq = testutil::shifted_sequence(scene, c, 4);
  const double good = mse(coadd(seq, c), scene);
  const double bad = mse(coadd(seq, {0, 0}), scene);
  CHECK(good < bad);
  CHECK(bad > 1e-4);
}

TEST_CASE("pure-noise coadds average down as 1/K") {
  const int k_count = 10, n = 128;
  const double sigma = 1.0;
  std::vector<Frame> frames;
  for (int k = 0; k < k_count; ++k) {
    Rng rng(mix64(92, static_cast<std::uint64_t>(k)));
    Frame f(n, n);
    for (double& v : f.data()) v = sigma * rng.gaussian();
    frames.push_back(std::move(f));
  }
  const Frame recon = coadd(FrameSequence(std::move(frames)), {0, 0});
  const double expected = sigma * sigma / k_count;
  CHECK(recon.variance() == doctest::Approx(expected).epsilon(0.2));
}

TEST_CASE("coadd is linear in the frames") {
  const Frame a1 = testutil::random_frame(8, 8, 93);
  const Frame a2 = testutil::random_frame(8, 8, 94);
  const Frame b1 = testutil::random_frame(8, 8, 95);
  const Frame b2 = testutil::random_frame(8, 8, 96);
  const MotionVector c{1, 1};

  auto combine = [](const Frame& x, const Frame& y, double alpha, double beta) {
    Frame out(x.rows(), x.cols());
    for (std::size_t i = 0; i < out.size(); ++i)
      out.data()[i] = alpha * x.data()[i] + beta * y.data()[i];
    return out;
  };

  const Frame lhs = coadd(
      FrameSequence({combine(a1, b1, 2.0, -0.5), combine(a2, b2, 2.0, -0.5)}), c);
  const Frame rhs = combine(coadd(FrameSequence({a1, a2}), c),
                            coadd(FrameSequence({b1, b2}), c), 2.0, -0.5);
  CHECK(testutil::rel_error(lhs, rhs) < 1e-12);
}

}  // TEST_SUITE
