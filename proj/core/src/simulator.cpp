#include "driftreg/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "driftreg/errors.hpp"
#include "driftreg/io.hpp"
#include "driftreg/rng.hpp"

namespace driftreg {

Frame make_synthetic_scene(const SynthSpec& spec) {
  if (spec.rows <= 0 || spec.cols <= 0)
    throw InvalidArgument("synthetic scene: dims must be positive");
  if (spec.blob_count < 0) throw InvalidArgument("synthetic scene: negative blob count");
  if (spec.sigma_min <= 0.0 || spec.sigma_max < spec.sigma_min)
    throw InvalidArgument("synthetic scene: bad sigma range");

  Frame scene(spec.rows, spec.cols, spec.background);
  Rng rng(spec.seed);
  for (int b = 0; b < spec.blob_count; ++b) {
    const double row = rng.uniform_real(0.0, spec.rows);
    const double col = rng.uniform_real(0.0, spec.cols);
    const double amp = rng.uniform_real(spec.intensity_min, spec.intensity_max);
    const double sigma = rng.uniform_real(spec.sigma_min, spec.sigma_max);
    const int reach = static_cast<int>(std::ceil(4.0 * sigma));
    const int r_lo = std::max(0, static_cast<int>(std::floor(row)) - reach);
    const int r_hi = std::min(spec.rows - 1, static_cast<int>(std::ceil(row)) + reach);
    const int c_lo = std::max(0, static_cast<int>(std::floor(col)) - reach);
    const int c_hi = std::min(spec.cols - 1, static_cast<int>(std::ceil(col)) + reach);
    const double inv = 1.0 / (2.0 * sigma * sigma);
    for (int r = r_lo; r <= r_hi; ++r) {
      for (int c = c_lo; c <= c_hi; ++c) {
        const double d2 = (r - row) * (r - row) + (c - col) * (c - col);
        scene(r, c) += amp * std::exp(-d2 * inv);
      }
    }
  }
  for (double& v : scene.data()) v = std::clamp(v, 0.0, 1.0);
  if (!(scene.variance() > 0.0))
    throw DataError("synthetic scene is constant; add blobs or texture");
  return scene;
}

Frame load_scene(const SceneSource& src) {
  if (src.kind == SceneSource::Kind::synthetic) return make_synthetic_scene(src.synth);

  Frame scene = io::read_frame(src.path);
  const auto [lo, hi] = std::minmax_element(scene.data().begin(), scene.data().end());
  if (*lo < 0.0 || *hi > 1.0) {
    if (*hi == *lo) throw DataError(src.path + ": scene is constant");
    for (double& v : scene.data()) v = (v - *lo) / (*hi - *lo);
  }
  if (!(scene.variance() > 0.0)) throw DataError(src.path + ": scene is constant");
  return scene;
}

Frame apply_window(const Frame& frame) {
  auto hann = [](int n, int size) {
    if (size == 1) return 1.0;
    return 0.5 * (1.0 - std::cos(2.0 * M_PI * n / (size - 1)));
  };
  Frame out(frame.rows(), frame.cols());
  std::vector<double> wc(frame.cols());
  for (int c = 0; c < frame.cols(); ++c) wc[c] = hann(c, frame.cols());
  for (int r = 0; r < frame.rows(); ++r) {
    const double wr = hann(r, frame.rows());
    for (int c = 0; c < frame.cols(); ++c) out(r, c) = frame(r, c) * wr * wc[c];
  }
  return out;
}

namespace {

void validate_params(const Frame& scene, const SequenceParams& p) {
  if (p.k_count < 2) throw InvalidArgument("simulate_sequence: need K >= 2");
  if (p.noise.kind == NoiseKind::poisson && !(p.noise.photon_scale > 0.0))
    throw InvalidArgument("simulate_sequence: photon_scale must be positive");
  if (!p.c) {
    if (p.random_c_bound < 0)
      throw InvalidArgument("simulate_sequence: negative drift bound");
    const int default_search =
        std::max(1, std::min(scene.rows(), scene.cols()) / (2 * p.k_count));
    if (p.random_c_bound > default_search)
      throw InvalidArgument(
          "simulate_sequence: random drift bound exceeds the default search "
          "range floor(N/(2K))");
  }
}

}  // namespace

SimulatedSequence simulate_sequence(const Frame& scene, const SequenceParams& params) {
  validate_params(scene, params);
  const std::uint64_t base = mix64(params.seed, params.noise.seed);

  MotionVector true_c;
  if (params.c) {
    true_c = *params.c;
  } else {
    Rng rng(mix64(base, 0));
    true_c.drow = static_cast<int>(
        rng.uniform_int(-params.random_c_bound, params.random_c_bound));
    true_c.dcol = static_cast<int>(
        rng.uniform_int(-params.random_c_bound, params.random_c_bound));
  }

  double sigma = 0.0;
  if (params.noise.kind == NoiseKind::awgn)
    sigma = snr_to_sigma(scene, params.noise.snr_db);

  std::vector<Frame> frames;
  frames.reserve(params.k_count);
  for (int k = 1; k <= params.k_count; ++k) {
    Frame y = translate(scene, true_c * k);
    Rng rng(mix64(base, static_cast<std::uint64_t>(k)));
    if (params.noise.kind == NoiseKind::awgn) {
      if (sigma > 0.0)
        for (double& v : y.data()) v += sigma * rng.gaussian();
    } else {
      const double scale = params.noise.photon_scale;
      for (double& v : y.data())
        v = static_cast<double>(rng.poisson(scale * std::max(v, 0.0))) / scale;
    }
    if (params.window == WindowKind::hann) y = apply_window(y);
    frames.push_back(std::move(y));
  }
  return {FrameSequence(std::move(frames)), true_c};
}

SimulatedSequence simulate_sequence(const SequenceSpec& spec) {
  return simulate_sequence(load_scene(spec.scene), spec.params);
}

}  // namespace driftreg
