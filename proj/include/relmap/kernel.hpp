#pragma once

#include "relmap/core.hpp"

namespace relmap {

/// Odd-sized weight grid with origin at the center pixel. Array index (i, j)
/// holds the weight of offset (dx = j - center_x, dy = i - center_y), dy
/// positive downward in image coordinates.
struct Kernel {
  Array w;  // (row, col), weights in [0,1]

  Kernel() = default;
  explicit Kernel(Array values) : w(std::move(values)) {}

  Index size_x() const { return w.cols(); }
  Index size_y() const { return w.rows(); }
  Index center_x() const { return (size_x() - 1) / 2; }
  Index center_y() const { return (size_y() - 1) / 2; }

  double at_offset(Index dx, Index dy) const { return w(center_y() + dy, center_x() + dx); }
  double origin_weight() const { return w(center_y(), center_x()); }
};

/// Directional relation kernel: at offset v != 0 the weight is
/// max(0, 1 - 2*theta/pi) where theta is the absolute angle between v and the
/// unit vector at `direction` (radians, 0 pointing right, measured with the Y
/// axis pointing up). The origin takes `origin_value`.
Kernel directional_kernel(Index size_x, Index size_y, double direction, double origin_value = 1.0);

/// Radial trapezoid: 0 up to r1, ramp to 1 on [r1,r2], 1 on [r2,r3], ramp to 0
/// on [r3,r4], 0 beyond. r1=r2=0 gives the decreasing-with-distance "close to"
/// disk; r1 > 0 gives a crown enforcing a minimal distance.
Kernel ring_kernel(Index size_x, Index size_y, double r1, double r2, double r3, double r4);

/// "Far from": 0 up to r_a, ramp to 1 on [r_a, r_b], 1 beyond.
Kernel far_kernel(Index size_x, Index size_y, double r_a, double r_b);

/// 1 at the origin, 0 elsewhere; dilation by this kernel is the identity.
Kernel dot_kernel(Index size_x, Index size_y);

/// Value at offset v of the result equals the input value at -v. Involution.
Kernel flip_kernel(const Kernel& b);

double kernel_mass(const Kernel& b);

}  // namespace relmap
