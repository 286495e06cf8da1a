#pragma once

#include <variant>
#include <vector>

#include "relmap/approx.hpp"

namespace relmap {

/// Triple (source k, target l, kernel B_kl). Source and target share a domain.
struct Relation {
  MembershipGrid source;
  MembershipGrid target;
  Kernel kernel;

  Relation(MembershipGrid k, MembershipGrid l, Kernel b)
      : source(std::move(k)), target(std::move(l)), kernel(std::move(b)) {
    if (source.width() != target.width() || source.height() != target.height())
      throw DimensionMismatch("relation: source and target must share dimensions");
  }
};

struct ExactDilation {
  TNorm tnorm = TNorm::product;
};
struct Convolution {
  ConvNormMode mode = ConvNormMode::kernel_sum;
};
struct Chm {
  double p = 100.0;
  double eps = 1e-30;
};
struct GeneralizedMean {
  double p = 100.0;
  TNorm tnorm = TNorm::product;
};

using MapMethod = std::variant<ExactDilation, Convolution, Chm, GeneralizedMean>;

/// Computes the relational map Phi of (source, kernel) with the chosen method.
MembershipGrid relational_map(const MembershipGrid& source, const Kernel& kernel,
                              const MapMethod& method, int threads = 1);

inline MembershipGrid relational_map(const Relation& rel, const MapMethod& method,
                                     int threads = 1) {
  return relational_map(rel.source, rel.kernel, method, threads);
}

/// Psi = Phi .* target.
MembershipGrid intersected_map(const MembershipGrid& phi, const MembershipGrid& target);

/// S = sum(Psi) / sum(target). Throws EmptyTarget when sum(target) == 0.
double score(const MembershipGrid& phi, const MembershipGrid& target);

/// Crisp target shape swept over the domain by score_heatmap.
struct TargetShape {
  enum class Kind { disk, single_pixel };
  Kind kind = Kind::disk;
  double radius = 5.0;

  static TargetShape disk(double r) { return {Kind::disk, r}; }
  static TargetShape single_pixel() { return {Kind::single_pixel, 0.0}; }

  /// Offsets (dx, dy) of the shape's set pixels relative to its center.
  std::vector<std::pair<Index, Index>> offsets() const;
};

/// H(x) = score of the shape centered at x, clipped to the domain and
/// renormalized by the clipped mass. Placements with zero clipped mass (only
/// possible for shapes not containing their center) yield NaN.
MembershipGrid score_heatmap_from(const MembershipGrid& phi, const TargetShape& shape,
                                  int threads = 1);

MembershipGrid score_heatmap(const MembershipGrid& source, const Kernel& kernel,
                             const MapMethod& method, const TargetShape& shape, int threads = 1);

enum class MidcutAxis { mid_x, mid_y };

/// mid_x returns column (width-1)/2 (length = height); mid_y returns row
/// (height-1)/2 (length = width).
Eigen::ArrayXd midcut(const MembershipGrid& grid, MidcutAxis axis);

}  // namespace relmap
