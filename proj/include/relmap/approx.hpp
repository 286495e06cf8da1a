#pragma once

#include "relmap/grid.hpp"
#include "relmap/kernel.hpp"
#include "relmap/morphology.hpp"

namespace relmap {

/// Normalization of the convolution map. kernel_sum divides by the kernel mass
/// so the output is a valid membership grid; none returns the raw convolution,
/// whose values may leave [0,1].
enum class ConvNormMode { none, kernel_sum };

/// Convolution-approximated relational map: out(x) = sum_o B(o) k(x-o), i.e.
/// the convolution k * B (equivalently the cross-correlation of k with the
/// flipped kernel), with zero padding. Under kernel_sum the result is divided
/// by the kernel mass.
MembershipGrid conv_map(const MembershipGrid& k, const Kernel& b, ConvNormMode mode,
                        int threads = 1);

/// Counter-harmonic approximation of the dilation: the pixelwise ratio of the
/// order-(p+1) and order-p moment convolutions of the t-norm products
/// t(o) = w(o) * m(x-o), with eps guarding the denominator and the output
/// clamped to [0,1]. Tends to the product-t-norm fuzzy dilation as p grows.
MembershipGrid chm_map(const MembershipGrid& m, const Kernel& w, double p, double eps = 1e-30,
                       int threads = 1);

/// Generalized-mean approximation:
/// out(x) = [ sum_o t(w(o), m(x-o))^p / sum_o w(o) ]^(1/p), stabilized by
/// factoring out the per-pixel running maximum so large p cannot underflow.
MembershipGrid genmean_map(const MembershipGrid& m, const Kernel& w, double p,
                           TNorm tnorm = TNorm::product, int threads = 1);

/// Two-scalar power mean ((x^p + y^p)/2)^(1/p); tends to max(x,y).
double power_mean_pair(double x, double y, double p);

/// Two-scalar counter-harmonic mean (x^(p+1)+y^(p+1))/(x^p+y^p); tends to
/// max(x,y). Returns 0 when both inputs are 0.
double chm_pair(double x, double y, double p);

}  // namespace relmap
