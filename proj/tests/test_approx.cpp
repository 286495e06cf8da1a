#include <doctest.h>

#include <cmath>

#include "relmap/approx.hpp"
#include "test_util.hpp"

using namespace relmap;

namespace {

// Direct double-sum convolution sum_o B(o) k(x-o).
Array conv_oracle(const MembershipGrid& k, const Kernel& b) {
  const Index h = k.height(), wd = k.width();
  Array out = Array::Zero(h, wd);
  for (Index r = 0; r < h; ++r)
    for (Index c = 0; c < wd; ++c)
      for (Index i = 0; i < b.size_y(); ++i)
        for (Index j = 0; j < b.size_x(); ++j) {
          const Index mr = r - (i - b.center_y());
          const Index mc = c - (j - b.center_x());
          if (mr < 0 || mr >= h || mc < 0 || mc >= wd) continue;
          out(r, c) += b.w(i, j) * k.values(mr, mc);
        }
  return out;
}

// Cross-correlation sum_o B(o) k(x+o), used to restate conv_map as the
// cross-correlation with the flipped kernel.
Array crosscorr_oracle(const MembershipGrid& k, const Kernel& b) {
  const Index h = k.height(), wd = k.width();
  Array out = Array::Zero(h, wd);
  for (Index r = 0; r < h; ++r)
    for (Index c = 0; c < wd; ++c)
      for (Index i = 0; i < b.size_y(); ++i)
        for (Index j = 0; j < b.size_x(); ++j) {
          const Index mr = r + (i - b.center_y());
          const Index mc = c + (j - b.center_x());
          if (mr < 0 || mr >= h || mc < 0 || mc >= wd) continue;
          out(r, c) += b.w(i, j) * k.values(mr, mc);
        }
  return out;
}

// Extended-precision direct evaluation of the counter-harmonic map.
Array chm_oracle(const MembershipGrid& m, const Kernel& w, double p, double eps) {
  const Index h = m.height(), wd = m.width();
  Array out(h, wd);
  for (Index r = 0; r < h; ++r)
    for (Index c = 0; c < wd; ++c) {
      long double num = 0, den = 0;
      for (Index i = 0; i < w.size_y(); ++i)
        for (Index j = 0; j < w.size_x(); ++j) {
          const Index mr = r - (i - w.center_y());
          const Index mc = c - (j - w.center_x());
          if (mr < 0 || mr >= h || mc < 0 || mc >= wd) continue;
          const long double t = static_cast<long double>(w.w(i, j)) * m.values(mr, mc);
          if (t <= 0) continue;
          const long double tp = powl(t, static_cast<long double>(p));
          den += tp;
          num += tp * t;
        }
      const long double v = den > 0 ? num / den : num / static_cast<long double>(eps);
      out(r, c) = static_cast<double>(std::clamp(v, 0.0L, 1.0L));
    }
  return out;
}

// Extended-precision direct evaluation of the generalized-mean map.
Array genmean_oracle(const MembershipGrid& m, const Kernel& w, double p, TNorm tnorm) {
  const Index h = m.height(), wd = m.width();
  const long double mass = kernel_mass(w);
  Array out(h, wd);
  for (Index r = 0; r < h; ++r)
    for (Index c = 0; c < wd; ++c) {
      long double sum = 0;
      for (Index i = 0; i < w.size_y(); ++i)
        for (Index j = 0; j < w.size_x(); ++j) {
          const Index mr = r - (i - w.center_y());
          const Index mc = c - (j - w.center_x());
          if (mr < 0 || mr >= h || mc < 0 || mc >= wd) continue;
          const long double t = tnorm_apply(tnorm, w.w(i, j), m.values(mr, mc));
          if (t <= 0) continue;
          sum += powl(t, static_cast<long double>(p));
        }
      out(r, c) = static_cast<double>(powl(sum / mass, 1.0L / static_cast<long double>(p)));
    }
  return out;
}

}  // namespace

TEST_CASE("conv_map with the dot kernel is the identity") {
  std::mt19937_64 rng(21);
  const MembershipGrid m = testutil::random_grid(rng, 6, 6);
  CHECK((conv_map(m, dot_kernel(3, 3), ConvNormMode::none).values == m.values).all());
  CHECK((conv_map(m, dot_kernel(3, 3), ConvNormMode::kernel_sum).values == m.values).all());
}

TEST_CASE("conv_map impulse response places the kernel") {
  std::mt19937_64 rng(22);
  const Kernel b = testutil::random_kernel(rng, 3, 3);
  Array impulse = Array::Zero(7, 7);
  impulse(3, 3) = 1.0;
  const Array resp = conv_map(MembershipGrid(impulse), b, ConvNormMode::none).values;
  // Convolution with a centered delta copies the kernel values at the center.
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) CHECK(resp(2 + i, 2 + j) == doctest::Approx(b.w(i, j)));
  CHECK(resp(0, 0) == 0.0);
}

TEST_CASE("conv_map equals direct double-sum and flipped cross-correlation") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const MembershipGrid k = testutil::random_grid(rng, 6, 6);
    const Kernel b = testutil::random_kernel(rng, 3, 3);
    const Array got = conv_map(k, b, ConvNormMode::none).values;
    CHECK(((got - conv_oracle(k, b)).abs() < 1e-12).all());
    CHECK(((got - crosscorr_oracle(k, flip_kernel(b))).abs() < 1e-12).all());
  }
}

TEST_CASE("kernel_sum mode keeps outputs in [0,1]") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const MembershipGrid k = testutil::random_grid(rng, 8, 8);
    const Kernel b = testutil::random_kernel(rng, 5, 5);
    const Array got = conv_map(k, b, ConvNormMode::kernel_sum).values;
    CHECK((got >= 0.0).all());
    CHECK((got <= 1.0 + 1e-15).all());
  }
}

TEST_CASE("conv_map rejects zero-mass kernels under kernel_sum") {
  const Kernel zero{Array::Zero(3, 3)};
  const MembershipGrid m(Array::Ones(4, 4));
  CHECK_THROWS_AS(conv_map(m, zero, ConvNormMode::kernel_sum), InvalidKernel);
  CHECK_NOTHROW(conv_map(m, zero, ConvNormMode::none));
}

TEST_CASE("chm_map constant images") {
  std::mt19937_64 rng(31);
  Kernel w = testutil::random_kernel(rng, 5, 5);
  w.w(2, 2) = 1.0;
  const MembershipGrid ones(Array::Ones(9, 9));
  CHECK((chm_map(ones, w, 50.0).values > 0.99).all());
  const MembershipGrid zeros(Array::Zero(9, 9));
  CHECK((chm_map(zeros, w, 50.0).values == 0.0).all());
}

TEST_CASE("chm_map approaches the dilation on crisp inputs at p=30") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 5; ++trial) {
    const MembershipGrid m = testutil::random_crisp_grid(rng, 10, 10);
    const Kernel w = testutil::random_crisp_kernel(rng, 5, 5);
    const Array exact = dilate(m, w, TNorm::product).values;
    const Array approx = chm_map(m, w, 30.0).values;
    CHECK(((approx - exact).abs() < 0.01).all());
  }
}

TEST_CASE("chm_map matches the extended-precision oracle") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const MembershipGrid m = testutil::random_grid(rng, 6, 6);
    const Kernel w = testutil::random_kernel(rng, 3, 3);
    for (double p : {1.0, 10.0, 100.0}) {
      const Array got = chm_map(m, w, p).values;
      CHECK(((got - chm_oracle(m, w, p, 1e-30)).abs() < 1e-9).all());
    }
  }
}

TEST_CASE("genmean_map scalar limit examples") {
  CHECK(std::abs(power_mean_pair(0.3, 0.9, 70.0) - 0.9) < 0.01);
  CHECK(std::abs(chm_pair(0.3, 0.9, 30.0) - 0.9) < 0.01);
  CHECK(power_mean_pair(0.0, 0.0, 10.0) == 0.0);
  CHECK(chm_pair(0.0, 0.0, 10.0) == 0.0);
  CHECK(power_mean_pair(0.7, 0.7, 10.0) == doctest::Approx(0.7));
}

TEST_CASE("genmean_map of all-zeros is all-zeros") {
  std::mt19937_64 rng(34);
  const Kernel w = testutil::random_kernel(rng, 5, 5);
  const MembershipGrid zeros(Array::Zero(7, 7));
  for (TNorm t : {TNorm::product, TNorm::minimum}) {
    CHECK((genmean_map(zeros, w, 100.0, t).values == 0.0).all());
  }
}

TEST_CASE("genmean_map matches the extended-precision oracle at p=100") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    const MembershipGrid m = testutil::random_grid(rng, 6, 6);
    const Kernel w = testutil::random_kernel(rng, 3, 3);
    for (TNorm t : {TNorm::product, TNorm::minimum}) {
      const Array got = genmean_map(m, w, 100.0, t).values;
      CHECK(((got - genmean_oracle(m, w, 100.0, t)).abs() < 1e-9).all());
    }
  }
}

TEST_CASE("genmean_map survives large p without underflowing to zero") {
  // All values small enough that t^p underflows doubles; the stabilized path
  // must still recover tau-scale outputs.
  Array v = Array::Constant(5, 5, 0.05);
  Array w = Array::Constant(3, 3, 0.08);
  const Array got = genmean_map(MembershipGrid(v), Kernel(w), 300.0).values;
  CHECK((got > 0.003).all());
  CHECK((got < 0.0041).all());  // tau = 0.004 up to normalizer effects
  const Array chm = chm_map(MembershipGrid(v), Kernel(w), 300.0).values;
  CHECK((chm > 0.0039).all());
  CHECK((chm <= 0.004 + 1e-12).all());
}

TEST_CASE("approximation error is non-increasing in p") {
  std::mt19937_64 rng(36);
  const MembershipGrid m = testutil::random_crisp_grid(rng, 12, 12);
  const Kernel w = testutil::random_kernel(rng, 5, 5);
  const Array exact = dilate(m, w, TNorm::product).values;
  double prev_chm = 2.0, prev_gm = 2.0;
  for (double p : {1.0, 3.0, 10.0, 30.0, 100.0}) {
    const double err_chm = (chm_map(m, w, p).values - exact).abs().maxCoeff();
    const double err_gm = (genmean_map(m, w, p).values - exact).abs().maxCoeff();
    CHECK(err_chm <= prev_chm + 1e-12);
    CHECK(err_gm <= prev_gm + 1e-12);
    prev_chm = err_chm;
    prev_gm = err_gm;
  }
}

TEST_CASE("power-mean upper bound against the dilation") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const MembershipGrid m = testutil::random_grid(rng, 8, 8);
    Kernel w = testutil::random_kernel(rng, 5, 5);
    w.w = (w.w + 0.2).min(1.0);  // keep the mass comfortably >= 1
    const double p = 30.0;
    const Array exact = dilate(m, w, TNorm::product).values;
    const Array mu = genmean_map(m, w, p).values;
    const double bound = std::pow(kernel_mass(w), 1.0 / p);
    CHECK((mu <= bound * exact + 1e-9).all());
  }
}
