#include "relmap/grid.hpp"

#include <cmath>

namespace relmap {

namespace {

void check_dims(Index width, Index height) {
  if (width < 1 || height < 1)
    throw InvalidDimension("grid dimensions must be >= 1, got " + std::to_string(width) + "x" +
                           std::to_string(height));
}

void check_center(Index width, Index height, PixelCoord c) {
  if (c.col < 0 || c.col >= width || c.row < 0 || c.row >= height)
    throw InvalidDimension("center (" + std::to_string(c.col) + "," + std::to_string(c.row) +
                           ") outside grid");
}

}  // namespace

MembershipGrid make_membership(Array values) {
  if (values.rows() < 1 || values.cols() < 1) throw InvalidDimension("empty grid");
  if (!((values >= 0.0).all() && (values <= 1.0).all()))
    throw std::invalid_argument("membership values outside [0,1]");
  return MembershipGrid(std::move(values));
}

MembershipGrid make_disk(Index width, Index height, PixelCoord center, double radius) {
  check_dims(width, height);
  check_center(width, height, center);
  if (radius < 0) throw std::invalid_argument("disk radius must be >= 0");
  Array v = Array::Zero(height, width);
  const double r2 = radius * radius;
  for (Index r = 0; r < height; ++r) {
    const double dy = static_cast<double>(r - center.row);
    for (Index c = 0; c < width; ++c) {
      const double dx = static_cast<double>(c - center.col);
      if (dx * dx + dy * dy <= r2) v(r, c) = 1.0;
    }
  }
  return MembershipGrid(std::move(v));
}

MembershipGrid make_square(Index width, Index height, PixelCoord center, Index side) {
  check_dims(width, height);
  check_center(width, height, center);
  if (side < 1) throw std::invalid_argument("square side must be >= 1");
  Array v = Array::Zero(height, width);
  const Index lo = -((side - 1) / 2);
  const Index hi = side / 2;
  for (Index r = 0; r < height; ++r) {
    const Index dy = r - center.row;
    if (dy < lo || dy > hi) continue;
    for (Index c = 0; c < width; ++c) {
      const Index dx = c - center.col;
      if (dx >= lo && dx <= hi) v(r, c) = 1.0;
    }
  }
  return MembershipGrid(std::move(v));
}

MembershipGrid elementwise_mul(const MembershipGrid& a, const MembershipGrid& b) {
  if (a.width() != b.width() || a.height() != b.height())
    throw DimensionMismatch("elementwise_mul: grids differ in shape");
  return MembershipGrid(a.values * b.values);
}

double grid_sum(const MembershipGrid& a) { return a.values.sum(); }

Array elementwise_pow(const Array& a, double p) {
  if (p < 0) throw std::invalid_argument("elementwise_pow: p must be >= 0");
  // std::pow(0,0) == 1, matching the 0^0 = 1 convention.
  return a.unaryExpr([p](double v) { return std::pow(v, p); });
}

}  // namespace relmap
