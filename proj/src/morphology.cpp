#include "relmap/morphology.hpp"

namespace relmap {

MembershipGrid dilate(const MembershipGrid& m, const Kernel& w, TNorm tnorm, int threads) {
  const Index h = m.height(), wd = m.width();
  const Index ky = w.size_y(), kx = w.size_x();
  const Index cy = w.center_y(), cx = w.center_x();
  Array out(h, wd);
  parallel_rows(h, threads, [&](Index r0, Index r1) {
    for (Index r = r0; r < r1; ++r) {
      for (Index c = 0; c < wd; ++c) {
        double best = 0.0;
        for (Index i = 0; i < ky; ++i) {
          const Index mr = r - (i - cy);
          if (mr < 0 || mr >= h) continue;
          for (Index j = 0; j < kx; ++j) {
            const double weight = w.w(i, j);
            if (weight == 0.0) continue;
            const Index mc = c - (j - cx);
            if (mc < 0 || mc >= wd) continue;
            best = std::max(best, tnorm_apply(tnorm, weight, m.values(mr, mc)));
          }
        }
        out(r, c) = best;
      }
    }
  });
  return MembershipGrid(std::move(out));
}

bool is_extensive(const Kernel& w) { return w.origin_weight() == 1.0; }

}  // namespace relmap
