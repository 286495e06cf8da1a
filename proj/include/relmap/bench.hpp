#pragma once

#include <limits>
#include <string>
#include <vector>

#include "relmap/relation.hpp"

namespace relmap {

/// One row of a sweep or timing run. `metric` is the MSE for sweeps and the
/// median wall-clock seconds for timing runs; `metric_min` carries the minimum
/// for timing runs and is NaN for sweeps.
struct BenchRecord {
  std::string experiment;
  std::string method;
  double param = 0.0;
  double metric = 0.0;
  double metric_min = std::numeric_limits<double>::quiet_NaN();
  int repeats = 1;
};

double mse(const MembershipGrid& a, const MembershipGrid& b);

struct SweepMethods {
  bool chm = true;
  bool genmean = true;
};

/// MSE of each mean approximation against the exact dilation map, per p, plus
/// the p-independent baselines (ExactDilation at 0, Convolution constant).
std::vector<BenchRecord> sweep_p(const MembershipGrid& source, const Kernel& kernel,
                                 const std::vector<double>& p_values,
                                 SweepMethods methods = {}, const std::string& experiment = "sweep_p",
                                 double eps = 1e-30, int threads = 1);

/// The "to the right of" setup scaled proportionally to a square image of the
/// given side: disk source of radius N/20 at (N/5, N/2), directional kernel
/// with full (2N-1)^2 support.
struct TimingSetup {
  MembershipGrid source;
  Kernel kernel;
};
TimingSetup right_of_setup(Index side);

/// Median and min wall-clock seconds of computing Phi per (method, size),
/// single-threaded, on the scaled "right of" configuration.
std::vector<BenchRecord> timing(const std::vector<Index>& sizes, double p, int repeats,
                                int warmup, const std::string& experiment = "timing");

}  // namespace relmap
