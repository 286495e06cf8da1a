#include "relmap/approx.hpp"

#include <cmath>

namespace relmap {

namespace {

// Below this the fast power-convolution sums may have lost terms to underflow;
// such pixels are recomputed with the max-factored loop.
constexpr double kUnderflowGuard = 1e-250;

void check_power(double p) {
  if (!(p > 0) || !std::isfinite(p)) throw std::invalid_argument("p must be positive and finite");
}

// Max over the kernel support of w(o) * m(x-o) for one output pixel.
double local_max_product(const MembershipGrid& m, const Kernel& w, Index r, Index c) {
  double tau = 0.0;
  const Index h = m.height(), wd = m.width();
  const Index cy = w.center_y(), cx = w.center_x();
  for (Index i = 0; i < w.size_y(); ++i) {
    const Index mr = r - (i - cy);
    if (mr < 0 || mr >= h) continue;
    for (Index j = 0; j < w.size_x(); ++j) {
      const double weight = w.w(i, j);
      if (weight == 0.0) continue;
      const Index mc = c - (j - cx);
      if (mc < 0 || mc >= wd) continue;
      tau = std::max(tau, weight * m.values(mr, mc));
    }
  }
  return tau;
}

// Stable CHM at one pixel: factor out tau and sum (t/tau)^p terms directly.
double chm_pixel_stable(const MembershipGrid& m, const Kernel& w, double p, double eps, Index r,
                        Index c) {
  const double tau = local_max_product(m, w, r, c);
  if (tau <= 0.0) return 0.0;
  const Index h = m.height(), wd = m.width();
  const Index cy = w.center_y(), cx = w.center_x();
  double num = 0.0, den = 0.0;
  for (Index i = 0; i < w.size_y(); ++i) {
    const Index mr = r - (i - cy);
    if (mr < 0 || mr >= h) continue;
    for (Index j = 0; j < w.size_x(); ++j) {
      const double weight = w.w(i, j);
      if (weight == 0.0) continue;
      const Index mc = c - (j - cx);
      if (mc < 0 || mc >= wd) continue;
      const double s = weight * m.values(mr, mc) / tau;
      if (s == 0.0) continue;
      const double sp = std::pow(s, p);
      den += sp;
      num += sp * s;
    }
  }
  return std::clamp(tau * num / (den + eps), 0.0, 1.0);
}

double genmean_pixel_stable(const MembershipGrid& m, const Kernel& w, double p, TNorm tnorm,
                            double mass, Index r, Index c) {
  const Index h = m.height(), wd = m.width();
  const Index cy = w.center_y(), cx = w.center_x();
  double tau = 0.0;
  for (Index i = 0; i < w.size_y(); ++i) {
    const Index mr = r - (i - cy);
    if (mr < 0 || mr >= h) continue;
    for (Index j = 0; j < w.size_x(); ++j) {
      const double weight = w.w(i, j);
      if (weight == 0.0) continue;
      const Index mc = c - (j - cx);
      if (mc < 0 || mc >= wd) continue;
      tau = std::max(tau, tnorm_apply(tnorm, weight, m.values(mr, mc)));
    }
  }
  if (tau <= 0.0) return 0.0;
  double sum = 0.0;
  for (Index i = 0; i < w.size_y(); ++i) {
    const Index mr = r - (i - cy);
    if (mr < 0 || mr >= h) continue;
    for (Index j = 0; j < w.size_x(); ++j) {
      const double weight = w.w(i, j);
      if (weight == 0.0) continue;
      const Index mc = c - (j - cx);
      if (mc < 0 || mc >= wd) continue;
      const double t = tnorm_apply(tnorm, weight, m.values(mr, mc));
      if (t == 0.0) continue;
      sum += std::pow(t / tau, p);
    }
  }
  return tau * std::pow(sum / mass, 1.0 / p);
}

}  // namespace

MembershipGrid conv_map(const MembershipGrid& k, const Kernel& b, ConvNormMode mode, int threads) {
  const double mass = kernel_mass(b);
  if (mode == ConvNormMode::kernel_sum && mass <= 0.0)
    throw InvalidKernel("conv_map: kernel_sum normalization needs positive kernel mass");
  const Index h = k.height(), wd = k.width();
  const Index cy = b.center_y(), cx = b.center_x();
  const double scale = mode == ConvNormMode::kernel_sum ? 1.0 / mass : 1.0;
  Array out(h, wd);
  parallel_rows(h, threads, [&](Index r0, Index r1) {
    for (Index r = r0; r < r1; ++r) {
      for (Index c = 0; c < wd; ++c) {
        double sum = 0.0;
        for (Index i = 0; i < b.size_y(); ++i) {
          const Index mr = r - (i - cy);
          if (mr < 0 || mr >= h) continue;
          for (Index j = 0; j < b.size_x(); ++j) {
            const double weight = b.w(i, j);
            if (weight == 0.0) continue;
            const Index mc = c - (j - cx);
            if (mc < 0 || mc >= wd) continue;
            sum += weight * k.values(mr, mc);
          }
        }
        out(r, c) = sum * scale;
      }
    }
  });
  return MembershipGrid(std::move(out));
}

MembershipGrid chm_map(const MembershipGrid& m, const Kernel& w, double p, double eps,
                       int threads) {
  check_power(p);
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  const Index h = m.height(), wd = m.width();
  const Index cy = w.center_y(), cx = w.center_x();
  const Array mp = elementwise_pow(m.values, p);
  const Array mp1 = mp * m.values;
  const Array wp = elementwise_pow(w.w, p);
  const Array wp1 = wp * w.w;
  Array out(h, wd);
  parallel_rows(h, threads, [&](Index r0, Index r1) {
    for (Index r = r0; r < r1; ++r) {
      for (Index c = 0; c < wd; ++c) {
        double num = 0.0, den = 0.0;
        for (Index i = 0; i < w.size_y(); ++i) {
          const Index mr = r - (i - cy);
          if (mr < 0 || mr >= h) continue;
          for (Index j = 0; j < w.size_x(); ++j) {
            if (w.w(i, j) == 0.0) continue;
            const Index mc = c - (j - cx);
            if (mc < 0 || mc >= wd) continue;
            num += wp1(i, j) * mp1(mr, mc);
            den += wp(i, j) * mp(mr, mc);
          }
        }
        // eps enters only the max-factored denominator (>= 1 when nonempty),
        // so it resolves 0/0 without distorting tiny but valid denominators.
        out(r, c) = den >= kUnderflowGuard ? std::clamp(num / den, 0.0, 1.0)
                                           : chm_pixel_stable(m, w, p, eps, r, c);
      }
    }
  });
  return MembershipGrid(std::move(out));
}

MembershipGrid genmean_map(const MembershipGrid& m, const Kernel& w, double p, TNorm tnorm,
                           int threads) {
  check_power(p);
  const double mass = kernel_mass(w);
  if (mass <= 0.0) throw InvalidKernel("genmean_map: kernel mass must be positive");
  const Index h = m.height(), wd = m.width();
  Array out(h, wd);
  if (tnorm != TNorm::product) {
    // min t-norm does not factor into a convolution of powers.
    parallel_rows(h, threads, [&](Index r0, Index r1) {
      for (Index r = r0; r < r1; ++r)
        for (Index c = 0; c < wd; ++c)
          out(r, c) = genmean_pixel_stable(m, w, p, tnorm, mass, r, c);
    });
    return MembershipGrid(std::move(out));
  }
  const Index cy = w.center_y(), cx = w.center_x();
  const Array mp = elementwise_pow(m.values, p);
  const Array wp = elementwise_pow(w.w, p);
  const double inv_p = 1.0 / p;
  parallel_rows(h, threads, [&](Index r0, Index r1) {
    for (Index r = r0; r < r1; ++r) {
      for (Index c = 0; c < wd; ++c) {
        double sum = 0.0;
        for (Index i = 0; i < w.size_y(); ++i) {
          const Index mr = r - (i - cy);
          if (mr < 0 || mr >= h) continue;
          for (Index j = 0; j < w.size_x(); ++j) {
            if (w.w(i, j) == 0.0) continue;
            const Index mc = c - (j - cx);
            if (mc < 0 || mc >= wd) continue;
            sum += wp(i, j) * mp(mr, mc);
          }
        }
        out(r, c) = sum >= kUnderflowGuard
                        ? std::pow(sum / mass, inv_p)
                        : genmean_pixel_stable(m, w, p, tnorm, mass, r, c);
      }
    }
  });
  return MembershipGrid(std::move(out));
}

double power_mean_pair(double x, double y, double p) {
  check_power(p);
  const double tau = std::max(x, y);
  if (tau <= 0.0) return 0.0;
  const double s = std::min(x, y) / tau;
  return tau * std::pow((1.0 + std::pow(s, p)) / 2.0, 1.0 / p);
}

double chm_pair(double x, double y, double p) {
  check_power(p);
  const double tau = std::max(x, y);
  if (tau <= 0.0) return 0.0;
  const double s = std::min(x, y) / tau;
  const double sp = std::pow(s, p);
  return tau * (1.0 + sp * s) / (1.0 + sp);
}

}  // namespace relmap
