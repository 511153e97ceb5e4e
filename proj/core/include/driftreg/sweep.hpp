#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "driftreg/frame.hpp"
#include "driftreg/registration.hpp"
#include "driftreg/simulator.hpp"

namespace driftreg {

enum class Method { ml, pairwise };

std::string method_name(Method m);
std::optional<Method> parse_method(const std::string& name);

struct SweepConfig {
  std::vector<double> snr_db_list;
  std::vector<int> k_list;
  int trials = 50;
  std::vector<Method> methods = {Method::ml};
  SceneSource scene;
  int drift_bound = 5;               // clamped per cell to floor(N/(2K))
  std::uint64_t base_seed = 0;
  WindowKind window = WindowKind::none;
  RegisterOptions register_options;
  int jobs = 1;                      // trial-level parallelism
  bool record_timing = false;        // measured wall time breaks byte-level
                                     // reproducibility; off by default
};

struct SweepRecord {
  std::string method;
  double snr_db = 0.0;
  int k = 0;
  int trial_index = 0;
  std::uint64_t seed = 0;
  MotionVector true_c;
  MotionVector est_c;
  double mean_abs_error = 0.0;
  double euclidean_error = 0.0;
  double wall_time_ms = 0.0;
};

// Per-trial simulation seed. Method is deliberately not mixed in: every
// method registers the same simulated sequence, so method comparisons are
// paired.
std::uint64_t trial_seed(std::uint64_t base_seed, double snr_db, int k, int trial);

// Runs the full grid (methods x snr x K x trials). Rows are ordered
// method-major then snr, K, trial, independent of the worker count.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

// The default SNR grid of the method-comparison run: -35 to 0 dB in 2.5 dB
// steps.
std::vector<double> default_compare_snr_grid();

std::string records_to_csv(const std::vector<SweepRecord>& records);
void write_csv(const std::filesystem::path& path,
               const std::vector<SweepRecord>& records);

// Mean of mean_abs_error over records matching (method, snr, k).
double cell_mean_error(const std::vector<SweepRecord>& records,
                       Method method, double snr_db, int k);

// Lowest SNR in the grid at which the cell mean error drops below the
// threshold (errors generally decrease with SNR).
std::optional<double> lowest_passing_snr(const std::vector<SweepRecord>& records,
                                         Method method, int k,
                                         const std::vector<double>& snr_grid,
                                         double threshold_px);

}  // namespace driftreg
