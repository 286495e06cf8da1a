#pragma once

#include <functional>

#include "relmap/approx.hpp"

namespace relmap {

/// dS/d(pixel) of the convolution-approximated score; unbounded sign.
struct GradientGrid {
  Array values;

  Index width() const { return values.cols(); }
  Index height() const { return values.rows(); }
};

/// dS*/dk(x) = sum_u l(u) B(u-x) / sum_u l(u): the cross-correlation of the
/// target with the kernel over the target mass. Independent of the source.
/// Under kernel_sum mode additionally divided by the kernel mass.
GradientGrid ds_dk(const MembershipGrid& target, const Kernel& kernel, ConvNormMode mode,
                   int threads = 1);

/// dS*/dl(x) = (Phi*(x) sum(l) - sum(Psi*)) / sum(l)^2, with Phi* computed
/// from the source under the given mode.
GradientGrid ds_dl(const MembershipGrid& source, const MembershipGrid& target,
                   const Kernel& kernel, ConvNormMode mode, int threads = 1);

/// Central-difference verification: returns the max over pixels of
/// |fd - analytic| / max(1, |analytic|). Throws NumericalFailure if the score
/// function returns a non-finite value during probing.
double fd_check(const std::function<double(const Array&)>& score_fn, const Array& at,
                const GradientGrid& analytic, double step = 1e-6);

}  // namespace relmap
