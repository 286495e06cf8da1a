#include "relmap/grad.hpp"

#include <cmath>

namespace relmap {

GradientGrid ds_dk(const MembershipGrid& target, const Kernel& kernel, ConvNormMode mode,
                   int threads) {
  const double target_mass = grid_sum(target);
  if (target_mass <= 0.0) throw EmptyTarget("ds_dk: target has zero mass");
  double scale = 1.0 / target_mass;
  if (mode == ConvNormMode::kernel_sum) {
    const double km = kernel_mass(kernel);
    if (km <= 0.0) throw InvalidKernel("ds_dk: kernel_sum needs positive kernel mass");
    scale /= km;
  }
  const Index h = target.height(), w = target.width();
  const Index cy = kernel.center_y(), cx = kernel.center_x();
  Array out(h, w);
  parallel_rows(h, threads, [&](Index r0, Index r1) {
    for (Index r = r0; r < r1; ++r) {
      for (Index c = 0; c < w; ++c) {
        double sum = 0.0;
        for (Index i = 0; i < kernel.size_y(); ++i) {
          // B(u - x): u = x + offset.
          const Index tr = r + (i - cy);
          if (tr < 0 || tr >= h) continue;
          for (Index j = 0; j < kernel.size_x(); ++j) {
            const double weight = kernel.w(i, j);
            if (weight == 0.0) continue;
            const Index tc = c + (j - cx);
            if (tc < 0 || tc >= w) continue;
            sum += weight * target.values(tr, tc);
          }
        }
        out(r, c) = sum * scale;
      }
    }
  });
  return GradientGrid{std::move(out)};
}

GradientGrid ds_dl(const MembershipGrid& source, const MembershipGrid& target,
                   const Kernel& kernel, ConvNormMode mode, int threads) {
  if (source.width() != target.width() || source.height() != target.height())
    throw DimensionMismatch("ds_dl: source and target must share dimensions");
  const double target_mass = grid_sum(target);
  if (target_mass <= 0.0) throw EmptyTarget("ds_dl: target has zero mass");
  const MembershipGrid phi = conv_map(source, kernel, mode, threads);
  const double psi_sum = (phi.values * target.values).sum();
  Array out = (phi.values * target_mass - psi_sum) / (target_mass * target_mass);
  return GradientGrid{std::move(out)};
}

double fd_check(const std::function<double(const Array&)>& score_fn, const Array& at,
                const GradientGrid& analytic, double step) {
  if (!(step > 0)) throw std::invalid_argument("fd_check: step must be positive");
  if (at.rows() != analytic.values.rows() || at.cols() != analytic.values.cols())
    throw DimensionMismatch("fd_check: gradient shape differs from probe point");
  Array probe = at;
  double worst = 0.0;
  for (Index r = 0; r < at.rows(); ++r) {
    for (Index c = 0; c < at.cols(); ++c) {
      const double v = at(r, c);
      probe(r, c) = v + step;
      const double up = score_fn(probe);
      probe(r, c) = v - step;
      const double down = score_fn(probe);
      probe(r, c) = v;
      if (!std::isfinite(up) || !std::isfinite(down))
        throw NumericalFailure("fd_check: non-finite score during probing");
      const double fd = (up - down) / (2.0 * step);
      const double a = analytic.values(r, c);
      worst = std::max(worst, std::abs(fd - a) / std::max(1.0, std::abs(a)));
    }
  }
  return worst;
}

}  // namespace relmap
