#pragma once

#include "driftreg/frame.hpp"

namespace driftreg {

// Closed-form scene estimate from a registered sequence (shift-and-add):
// (1/K) sum_{k=1}^{K} translate(y_k, -k*c). The mean keeps photometry
// comparable across K; the argmax of the registration objective is
// unaffected by the scale.
Frame coadd(const FrameSequence& seq, const MotionVector& c);

}  // namespace driftreg
