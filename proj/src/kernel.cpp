#include "relmap/kernel.hpp"

#include <cmath>
#include <numbers>

namespace relmap {

namespace {

void check_odd(Index size_x, Index size_y) {
  if (size_x < 1 || size_y < 1 || size_x % 2 == 0 || size_y % 2 == 0)
    throw InvalidKernel("kernel sizes must be odd and >= 1, got " + std::to_string(size_x) + "x" +
                        std::to_string(size_y));
}

// Fills the kernel from a radial profile over the offset distance.
template <class Profile>
Kernel radial_kernel(Index size_x, Index size_y, Profile profile) {
  check_odd(size_x, size_y);
  Array w(size_y, size_x);
  const Index cx = (size_x - 1) / 2;
  const Index cy = (size_y - 1) / 2;
  for (Index i = 0; i < size_y; ++i) {
    const double dy = static_cast<double>(i - cy);
    for (Index j = 0; j < size_x; ++j) {
      const double dx = static_cast<double>(j - cx);
      w(i, j) = profile(std::hypot(dx, dy));
    }
  }
  return Kernel(std::move(w));
}

}  // namespace

Kernel directional_kernel(Index size_x, Index size_y, double direction, double origin_value) {
  check_odd(size_x, size_y);
  if (origin_value < 0.0 || origin_value > 1.0)
    throw InvalidKernel("origin_value must be in [0,1]");
  Array w(size_y, size_x);
  const Index cx = (size_x - 1) / 2;
  const Index cy = (size_y - 1) / 2;
  for (Index i = 0; i < size_y; ++i) {
    // Image rows grow downward; flip so angles follow the math convention.
    const double dy = -static_cast<double>(i - cy);
    for (Index j = 0; j < size_x; ++j) {
      const double dx = static_cast<double>(j - cx);
      if (i == cy && j == cx) {
        w(i, j) = origin_value;
        continue;
      }
      double a = std::atan2(dy, dx) - direction;
      a = std::remainder(a, 2.0 * std::numbers::pi);
      const double theta = std::abs(a);
      w(i, j) = std::max(0.0, 1.0 - 2.0 * theta / std::numbers::pi);
    }
  }
  return Kernel(std::move(w));
}

Kernel ring_kernel(Index size_x, Index size_y, double r1, double r2, double r3, double r4) {
  if (!(0 <= r1 && r1 <= r2 && r2 <= r3 && r3 <= r4))
    throw InvalidKernel("ring_kernel requires 0 <= r1 <= r2 <= r3 <= r4");
  return radial_kernel(size_x, size_y, [=](double d) {
    if (d < r2) {
      if (d <= r1) return 0.0;
      return (d - r1) / (r2 - r1);
    }
    if (d <= r3) return 1.0;
    if (d < r4) return (r4 - d) / (r4 - r3);
    return 0.0;
  });
}

Kernel far_kernel(Index size_x, Index size_y, double r_a, double r_b) {
  if (!(0 <= r_a && r_a <= r_b)) throw InvalidKernel("far_kernel requires 0 <= r_a <= r_b");
  return radial_kernel(size_x, size_y, [=](double d) {
    if (d <= r_a) return 0.0;
    if (d < r_b) return (d - r_a) / (r_b - r_a);
    return 1.0;
  });
}

Kernel dot_kernel(Index size_x, Index size_y) {
  check_odd(size_x, size_y);
  Array w = Array::Zero(size_y, size_x);
  w((size_y - 1) / 2, (size_x - 1) / 2) = 1.0;
  return Kernel(std::move(w));
}

Kernel flip_kernel(const Kernel& b) {
  return Kernel(b.w.reverse().eval());
}

double kernel_mass(const Kernel& b) { return b.w.sum(); }

}  // namespace relmap
