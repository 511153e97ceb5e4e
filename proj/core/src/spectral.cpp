#include "driftreg/spectral.hpp"

#include <cstddef>

#include "driftreg/errors.hpp"
#include "fft_backend.hpp"

namespace driftreg {

Spectrum forward_dft(const Frame& frame) {
  const int rows = frame.rows(), cols = frame.cols();
  std::vector<std::complex<double>> in(frame.data().begin(), frame.data().end());
  Spectrum out(rows, cols);
  detail::fft2d(in.data(), out.data().data(), rows, cols, /*inverse=*/false);
  return out;
}

Frame inverse_dft(const Spectrum& spectrum) {
  const int rows = spectrum.rows(), cols = spectrum.cols();
  if (rows <= 0 || cols <= 0) throw InvalidArgument("inverse_dft: empty spectrum");
  std::vector<std::complex<double>> out(spectrum.data().size());
  detail::fft2d(spectrum.data().data(), out.data(), rows, cols, /*inverse=*/true);
  Frame result(rows, cols);
  const double scale = 1.0 / (static_cast<double>(rows) * cols);
  for (std::size_t i = 0; i < out.size(); ++i)
    result.data()[i] = out[i].real() * scale;
  return result;
}

namespace {

// conj(A) .* B accumulated into acc.
void accumulate_cross_power(const Spectrum& a, const Spectrum& b,
                            std::vector<std::complex<double>>& acc) {
  const auto& av = a.data();
  const auto& bv = b.data();
  for (std::size_t i = 0; i < acc.size(); ++i)
    acc[i] += std::conj(av[i]) * bv[i];
}

CorrelationSurface inverse_to_surface(const std::vector<std::complex<double>>& spec,
                                      int rows, int cols) {
  std::vector<std::complex<double>> out(spec.size());
  detail::fft2d(spec.data(), out.data(), rows, cols, /*inverse=*/true);
  Frame grid(rows, cols);
  const double scale = 1.0 / (static_cast<double>(rows) * cols);
  for (std::size_t i = 0; i < out.size(); ++i)
    grid.data()[i] = out[i].real() * scale;
  return CorrelationSurface(std::move(grid));
}

}  // namespace

CorrelationSurface cross_correlate(const Frame& a, const Frame& b) {
  if (!a.same_dims(b))
    throw InvalidArgument("cross_correlate: dims mismatch");
  const Spectrum sa = forward_dft(a);
  const Spectrum sb = forward_dft(b);
  std::vector<std::complex<double>> acc(sa.data().size());
  accumulate_cross_power(sa, sb, acc);
  return inverse_to_surface(acc, a.rows(), a.cols());
}

CorrelationSurface group_sum_surface(const std::vector<Spectrum>& spectra, int m) {
  const int k_count = static_cast<int>(spectra.size());
  if (k_count < 2) throw InvalidArgument("group_sum_surface: need at least 2 spectra");
  if (m < 1 || m > k_count - 1)
    throw InvalidArgument("group_sum_surface: m out of range");
  const int rows = spectra.front().rows(), cols = spectra.front().cols();
  std::vector<std::complex<double>> acc(static_cast<std::size_t>(rows) * cols);
  for (int k = 0; k + m < k_count; ++k)
    accumulate_cross_power(spectra[k], spectra[k + m], acc);
  return inverse_to_surface(acc, rows, cols);
}

}  // namespace driftreg
