#pragma once

#include "relmap/core.hpp"

namespace relmap {

/// Dense 2D grid of membership values in [0,1].
struct MembershipGrid {
  Array values;  // (row, col)

  MembershipGrid() = default;
  explicit MembershipGrid(Array v) : values(std::move(v)) {}

  Index width() const { return values.cols(); }
  Index height() const { return values.rows(); }
  double operator()(Index row, Index col) const { return values(row, col); }
  double& operator()(Index row, Index col) { return values(row, col); }
};

/// Validates the [0,1] membership invariant; throws InvalidDimension on an
/// empty grid and std::invalid_argument on out-of-range values.
MembershipGrid make_membership(Array values);

/// Crisp disk: 1 at every pixel whose center-to-center Euclidean distance from
/// `center` is <= radius, 0 elsewhere.
MembershipGrid make_disk(Index width, Index height, PixelCoord center, double radius);

/// Crisp axis-aligned filled square of the given side, clipped to the grid.
/// Even sides anchor so `center` is the top-left pixel of the central 2x2
/// block, i.e. the square spans offsets -(side-1)/2 .. side/2.
MembershipGrid make_square(Index width, Index height, PixelCoord center, Index side);

MembershipGrid elementwise_mul(const MembershipGrid& a, const MembershipGrid& b);

double grid_sum(const MembershipGrid& a);

/// Per-pixel v^p with the convention 0^0 = 1. Requires p >= 0.
Array elementwise_pow(const Array& a, double p);

}  // namespace relmap
