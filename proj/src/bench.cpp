#include "relmap/bench.hpp"

#include <algorithm>
#include <chrono>

namespace relmap {

double mse(const MembershipGrid& a, const MembershipGrid& b) {
  if (a.width() != b.width() || a.height() != b.height())
    throw DimensionMismatch("mse: grids differ in shape");
  return (a.values - b.values).square().mean();
}

std::vector<BenchRecord> sweep_p(const MembershipGrid& source, const Kernel& kernel,
                                 const std::vector<double>& p_values, SweepMethods methods,
                                 const std::string& experiment, double eps, int threads) {
  for (double p : p_values)
    if (!(p > 0)) throw std::invalid_argument("sweep_p: p values must be positive");
  const MembershipGrid exact = dilate(source, kernel, TNorm::product, threads);
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  std::vector<BenchRecord> records;
  records.push_back({experiment, "dilation", 0.0, 0.0, kNaN, 1});
  const MembershipGrid conv = conv_map(source, kernel, ConvNormMode::kernel_sum, threads);
  records.push_back({experiment, "conv", 0.0, mse(conv, exact), kNaN, 1});
  for (double p : p_values) {
    if (methods.chm)
      records.push_back({experiment, "chm", p, mse(chm_map(source, kernel, p, eps, threads), exact), kNaN, 1});
    if (methods.genmean)
      records.push_back(
          {experiment, "genmean", p, mse(genmean_map(source, kernel, p, TNorm::product, threads), exact), kNaN, 1});
  }
  return records;
}

TimingSetup right_of_setup(Index side) {
  if (side < 10) throw InvalidDimension("right_of_setup: side must be >= 10");
  const double radius = static_cast<double>(side) / 20.0;
  const PixelCoord center{side / 5, side / 2};
  MembershipGrid source = make_disk(side, side, center, radius);
  Kernel kernel = directional_kernel(2 * side - 1, 2 * side - 1, 0.0);
  return {std::move(source), std::move(kernel)};
}

std::vector<BenchRecord> timing(const std::vector<Index>& sizes, double p, int repeats,
                                int warmup, const std::string& experiment) {
  if (repeats < 3) throw std::invalid_argument("timing: repeats must be >= 3");
  if (warmup < 1) throw std::invalid_argument("timing: warmup must be >= 1");
  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  for (Index side : sizes) {
    const TimingSetup setup = right_of_setup(side);
    const auto time_method = [&](const std::string& name, const auto& run) {
      std::vector<double> secs;
      for (int i = 0; i < warmup + repeats; ++i) {
        const auto t0 = clock::now();
        run();
        const auto t1 = clock::now();
        if (i >= warmup) secs.push_back(std::chrono::duration<double>(t1 - t0).count());
      }
      std::sort(secs.begin(), secs.end());
      const double median = secs[secs.size() / 2];
      records.push_back({experiment, name, static_cast<double>(side), median, secs.front(),
                         static_cast<int>(secs.size())});
    };
    time_method("dilation", [&] { dilate(setup.source, setup.kernel, TNorm::product); });
    time_method("conv", [&] { conv_map(setup.source, setup.kernel, ConvNormMode::kernel_sum); });
    time_method("chm", [&] { chm_map(setup.source, setup.kernel, p); });
    time_method("genmean", [&] { genmean_map(setup.source, setup.kernel, p); });
  }
  return records;
}

}  // namespace relmap
