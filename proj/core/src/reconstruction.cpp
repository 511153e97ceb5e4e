#include "driftreg/reconstruction.hpp"

#include "driftreg/errors.hpp"

namespace driftreg {

Frame coadd(const FrameSequence& seq, const MotionVector& c) {
  const int k_count = seq.count();
  if (k_count == 0) throw InvalidArgument("coadd: empty sequence");
  Frame acc(seq.rows(), seq.cols());
  for (int k = 0; k < k_count; ++k) {
    const Frame corrected = translate(seq[k], c * -(k + 1));
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc.data()[i] += corrected.data()[i];
  }
  for (double& v : acc.data()) v /= k_count;
  return acc;
}

}  // namespace driftreg
