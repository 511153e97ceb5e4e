#include "fft_backend.hpp"

#include <fftw3.h>

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

namespace driftreg::detail {

namespace {

struct PlanKey {
  int rows;
  int cols;
  bool inverse;
  friend auto operator<=>(const PlanKey&, const PlanKey&) = default;
};

// fftw_execute_dft is thread-safe; plan creation is not.
std::mutex plan_mutex;
std::map<PlanKey, fftw_plan>& plan_cache() {
  static std::map<PlanKey, fftw_plan> cache;
  return cache;
}

fftw_plan get_plan(int rows, int cols, bool inverse) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto& cache = plan_cache();
  const PlanKey key{rows, cols, inverse};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  // Planned out-of-place; fftw_execute_dft requires the same placement.
  std::vector<std::complex<double>> src(static_cast<std::size_t>(rows) * cols);
  std::vector<std::complex<double>> dst(src.size());
  fftw_plan plan = fftw_plan_dft_2d(
      rows, cols,
      reinterpret_cast<fftw_complex*>(src.data()),
      reinterpret_cast<fftw_complex*>(dst.data()),
      inverse ? FFTW_BACKWARD : FFTW_FORWARD,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(key, plan);
  return plan;
}

}  // namespace

void fft2d(const std::complex<double>* in, std::complex<double>* out,
           int rows, int cols, bool inverse) {
  fftw_plan plan = get_plan(rows, cols, inverse);
  // const_cast: FFTW's API is not const-correct; out-of-place execution
  // leaves the input untouched.
  fftw_execute_dft(plan,
                   reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace driftreg::detail
