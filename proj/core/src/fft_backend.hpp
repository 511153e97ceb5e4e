#pragma once

#include <complex>

namespace driftreg::detail {

// Complex-to-complex 2-D FFT on row-major buffers of rows*cols elements.
// Plans are cached per (rows, cols, direction) and created with
// FFTW_ESTIMATE | FFTW_UNALIGNED so results are reproducible across runs and
// buffers need no special alignment. Thread-safe.
void fft2d(const std::complex<double>* in, std::complex<double>* out,
           int rows, int cols, bool inverse);

}  // namespace driftreg::detail
