#include "driftreg/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <thread>

#include "driftreg/baseline.hpp"
#include "driftreg/errors.hpp"
#include "driftreg/rng.hpp"

namespace driftreg {

std::string method_name(Method m) {
  switch (m) {
    case Method::ml: return "ml";
    case Method::pairwise: return "pairwise";
  }
  return "?";
}

std::optional<Method> parse_method(const std::string& name) {
  if (name == "ml") return Method::ml;
  if (name == "pairwise") return Method::pairwise;
  return std::nullopt;
}

std::uint64_t trial_seed(std::uint64_t base_seed, double snr_db, int k, int trial) {
  std::uint64_t s = mix64(base_seed, double_bits(snr_db));
  s = mix64(s, static_cast<std::uint64_t>(k));
  return mix64(s, static_cast<std::uint64_t>(trial));
}

namespace {

void validate_config(const SweepConfig& config) {
  if (config.snr_db_list.empty()) throw InvalidArgument("sweep: empty SNR list");
  if (config.k_list.empty()) throw InvalidArgument("sweep: empty K list");
  if (config.trials < 1) throw InvalidArgument("sweep: trials must be >= 1");
  if (config.methods.empty()) throw InvalidArgument("sweep: no methods selected");
  if (config.drift_bound < 0) throw InvalidArgument("sweep: negative drift bound");
  for (int k : config.k_list)
    if (k < 2) throw InvalidArgument("sweep: K must be >= 2");
}

MotionVector run_method(Method method, const FrameSequence& seq,
                        const RegisterOptions& opts) {
  switch (method) {
    case Method::ml:
      return ml_register(seq, SearchRange{}, opts).estimate;
    case Method::pairwise:
      return project_constant(pairwise_register(seq, SearchRange{}, opts));
  }
  throw InvalidArgument("sweep: unknown method");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  validate_config(config);
  const Frame scene = load_scene(config.scene);

  struct Cell {
    double snr_db;
    int k;
  };
  std::vector<Cell> cells;
  for (double snr : config.snr_db_list)
    for (int k : config.k_list) cells.push_back({snr, k});

  const std::size_t methods = config.methods.size();
  const std::size_t per_method = cells.size() * static_cast<std::size_t>(config.trials);
  std::vector<SweepRecord> records(methods * per_method);

  // task = one (cell, trial): simulate once, run every method on it
  const std::size_t task_count = per_method;
  std::atomic<std::size_t> next_task{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t task = next_task.fetch_add(1);
      if (task >= task_count || failed.load()) return;
      const std::size_t cell_idx = task / config.trials;
      const int trial = static_cast<int>(task % config.trials);
      const Cell& cell = cells[cell_idx];
      try {
        const std::uint64_t seed =
            trial_seed(config.base_seed, cell.snr_db, cell.k, trial);
        SequenceParams params;
        params.k_count = cell.k;
        params.random_c_bound = std::min(
            config.drift_bound,
            std::max(1, std::min(scene.rows(), scene.cols()) / (2 * cell.k)));
        params.noise.kind = NoiseKind::awgn;
        params.noise.snr_db = cell.snr_db;
        params.window = config.window;
        params.seed = seed;
        const SimulatedSequence sim = simulate_sequence(scene, params);

        for (std::size_t mi = 0; mi < methods; ++mi) {
          const auto t0 = std::chrono::steady_clock::now();
          const MotionVector est =
              run_method(config.methods[mi], sim.frames, config.register_options);
          const auto t1 = std::chrono::steady_clock::now();

          SweepRecord rec;
          rec.method = method_name(config.methods[mi]);
          rec.snr_db = cell.snr_db;
          rec.k = cell.k;
          rec.trial_index = trial;
          rec.seed = seed;
          rec.true_c = sim.true_c;
          rec.est_c = est;
          rec.mean_abs_error =
              registration_error(sim.true_c, est, ErrorMetric::mean_abs);
          rec.euclidean_error =
              registration_error(sim.true_c, est, ErrorMetric::euclidean);
          rec.wall_time_ms =
              config.record_timing
                  ? std::chrono::duration<double, std::milli>(t1 - t0).count()
                  : 0.0;
          records[mi * per_method + task] = std::move(rec);
        }
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        failed.store(true);
        if (failure.empty()) failure = e.what();
        return;
      }
    }
  };

  const int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw Error("sweep trial failed: " + failure);
  return records;
}

std::vector<double> default_compare_snr_grid() {
  std::vector<double> grid;
  for (double snr = -35.0; snr <= 0.0 + 1e-9; snr += 2.5) grid.push_back(snr);
  return grid;
}

std::string records_to_csv(const std::vector<SweepRecord>& records) {
  std::string out =
      "method,snr_db,K,trial_index,seed,true_c,est_c,mean_abs_error,"
      "euclidean_error,wall_time_ms\n";
  char buf[64];
  for (const SweepRecord& r : records) {
    out += r.method;
    out += ',';
    out += format_double(r.snr_db);
    std::snprintf(buf, sizeof(buf), ",%d,%d,%llu,\"%d,%d\",\"%d,%d\",", r.k,
                  r.trial_index, static_cast<unsigned long long>(r.seed),
                  r.true_c.drow, r.true_c.dcol, r.est_c.drow, r.est_c.dcol);
    out += buf;
    out += format_double(r.mean_abs_error);
    out += ',';
    out += format_double(r.euclidean_error);
    std::snprintf(buf, sizeof(buf), ",%.3f\n", r.wall_time_ms);
    out += buf;
  }
  return out;
}

void write_csv(const std::filesystem::path& path,
               const std::vector<SweepRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError(path.string() + ": cannot open for writing");
  const std::string csv = records_to_csv(records);
  out.write(csv.data(), static_cast<std::streamsize>(csv.size()));
  if (!out) throw DataError(path.string() + ": write failed");
}

double cell_mean_error(const std::vector<SweepRecord>& records, Method method,
                       double snr_db, int k) {
  const std::string name = method_name(method);
  double sum = 0.0;
  int count = 0;
  for (const SweepRecord& r : records) {
    if (r.method == name && r.k == k && r.snr_db == snr_db) {
      sum += r.mean_abs_error;
      ++count;
    }
  }
  if (count == 0) throw InvalidArgument("cell_mean_error: no matching records");
  return sum / count;
}

std::optional<double> lowest_passing_snr(const std::vector<SweepRecord>& records,
                                         Method method, int k,
                                         const std::vector<double>& snr_grid,
                                         double threshold_px) {
  std::optional<double> best;
  for (double snr : snr_grid) {
    if (cell_mean_error(records, method, snr, k) < threshold_px) {
      if (!best || snr < *best) best = snr;
    }
  }
  return best;
}

}  // namespace driftreg
