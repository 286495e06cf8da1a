#pragma once

#include <algorithm>

#include "relmap/grid.hpp"
#include "relmap/kernel.hpp"

namespace relmap {

enum class TNorm { product, minimum };

inline double tnorm_apply(TNorm t, double a, double b) {
  return t == TNorm::product ? a * b : std::min(a, b);
}

/// Exact fuzzy dilation: out(x) = max_o t(w(o), m(x-o)), zero padding outside
/// the image. Direct loop; this is the reference all approximations are
/// measured against, so no algorithmic shortcuts.
MembershipGrid dilate(const MembershipGrid& m, const Kernel& w, TNorm tnorm, int threads = 1);

/// True iff the kernel weight at the origin is 1, which makes dilation by it
/// extensive (output >= input pointwise).
bool is_extensive(const Kernel& w);

}  // namespace relmap
