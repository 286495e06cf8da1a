#include "relmap/relation.hpp"

#include <cmath>
#include <limits>

namespace relmap {

MembershipGrid relational_map(const MembershipGrid& source, const Kernel& kernel,
                              const MapMethod& method, int threads) {
  return std::visit(
      [&](const auto& m) -> MembershipGrid {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ExactDilation>)
          return dilate(source, kernel, m.tnorm, threads);
        else if constexpr (std::is_same_v<T, Convolution>)
          return conv_map(source, kernel, m.mode, threads);
        else if constexpr (std::is_same_v<T, Chm>)
          return chm_map(source, kernel, m.p, m.eps, threads);
        else
          return genmean_map(source, kernel, m.p, m.tnorm, threads);
      },
      method);
}

MembershipGrid intersected_map(const MembershipGrid& phi, const MembershipGrid& target) {
  return elementwise_mul(phi, target);
}

double score(const MembershipGrid& phi, const MembershipGrid& target) {
  const double mass = grid_sum(target);
  if (mass <= 0.0) throw EmptyTarget("score: target has zero mass");
  return grid_sum(intersected_map(phi, target)) / mass;
}

std::vector<std::pair<Index, Index>> TargetShape::offsets() const {
  std::vector<std::pair<Index, Index>> out;
  if (kind == Kind::single_pixel) {
    out.emplace_back(0, 0);
    return out;
  }
  const Index r = static_cast<Index>(std::floor(radius));
  const double r2 = radius * radius;
  for (Index dy = -r; dy <= r; ++dy)
    for (Index dx = -r; dx <= r; ++dx)
      if (static_cast<double>(dx * dx + dy * dy) <= r2) out.emplace_back(dx, dy);
  return out;
}

MembershipGrid score_heatmap_from(const MembershipGrid& phi, const TargetShape& shape,
                                  int threads) {
  const auto offs = shape.offsets();
  if (offs.empty()) throw std::invalid_argument("score_heatmap: empty target shape");
  const Index h = phi.height(), w = phi.width();
  Array out(h, w);
  parallel_rows(h, threads, [&](Index r0, Index r1) {
    for (Index r = r0; r < r1; ++r) {
      for (Index c = 0; c < w; ++c) {
        double sum = 0.0;
        Index count = 0;
        for (const auto& [dx, dy] : offs) {
          const Index rr = r + dy, cc = c + dx;
          if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
          sum += phi.values(rr, cc);
          ++count;
        }
        out(r, c) = count > 0 ? sum / static_cast<double>(count)
                              : std::numeric_limits<double>::quiet_NaN();
      }
    }
  });
  return MembershipGrid(std::move(out));
}

MembershipGrid score_heatmap(const MembershipGrid& source, const Kernel& kernel,
                             const MapMethod& method, const TargetShape& shape, int threads) {
  return score_heatmap_from(relational_map(source, kernel, method, threads), shape, threads);
}

Eigen::ArrayXd midcut(const MembershipGrid& grid, MidcutAxis axis) {
  if (axis == MidcutAxis::mid_x) return grid.values.col((grid.width() - 1) / 2);
  return grid.values.row((grid.height() - 1) / 2).transpose();
}

}  // namespace relmap
