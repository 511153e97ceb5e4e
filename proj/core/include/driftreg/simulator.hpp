#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "driftreg/frame.hpp"

namespace driftreg {

// Procedural deep-field-like scene: sparse Gaussian blobs on a faint
// background, clamped to [0,1]. Deterministic in seed.
struct SynthSpec {
  int rows = 250;
  int cols = 250;
  int blob_count = 120;
  double intensity_min = 0.2;
  double intensity_max = 1.0;
  double sigma_min = 0.7;
  double sigma_max = 1.8;
  double background = 0.02;
  std::uint64_t seed = 1;
};

struct SceneSource {
  enum class Kind { file, synthetic };
  Kind kind = Kind::synthetic;
  std::string path;  // file only
  SynthSpec synth;   // synthetic only
};

enum class WindowKind { none, hann };

// Per-sequence generation parameters (scene supplied separately).
struct SequenceParams {
  int k_count = 0;
  std::optional<MotionVector> c;  // nullopt draws a random drift
  int random_c_bound = 5;         // |components| <= bound when c is random
  NoiseSpec noise;
  WindowKind window = WindowKind::none;
  std::uint64_t seed = 0;
};

struct SequenceSpec {
  SceneSource scene;
  SequenceParams params;
};

struct SimulatedSequence {
  FrameSequence frames;
  MotionVector true_c;
};

Frame make_synthetic_scene(const SynthSpec& spec);

// Loads or generates the scene. File scenes are normalized: PGM by maxval,
// MLRF min-max rescaled to [0,1] when samples fall outside it. Constant
// scenes are rejected.
Frame load_scene(const SceneSource& src);

// Multiplies by a separable Hann window, 0.5*(1 - cos(2*pi*n/(N-1))).
Frame apply_window(const Frame& frame);

// Generates y_k = translate(scene, k*c) + n_k for k = 1..K, then windows if
// requested. RNG streams are pinned: with base = mix64(seed, noise.seed),
// stream mix64(base, 0) draws the random drift (row then col) and stream
// mix64(base, k) the noise of frame k. Noiseless frames consume no draws.
SimulatedSequence simulate_sequence(const Frame& scene, const SequenceParams& params);

SimulatedSequence simulate_sequence(const SequenceSpec& spec);

}  // namespace driftreg
