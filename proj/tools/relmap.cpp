// Command-line front end: relational maps, score heatmaps, gradients and the
// benchmark harness. See README.md for examples.

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relmap/bench.hpp"
#include "relmap/grad.hpp"
#include "relmap/io.hpp"

namespace {

using namespace relmap;

struct Config {
  Index width = 100, height = 100;
  std::string relation = "right";  // right | close | far | inside
  // Source overrides (negative means "use the relation preset").
  double source_radius = 5.0;
  Index source_side = 50;
  Index source_cx = -1, source_cy = -1;
  // Kernel parameters.
  Index kernel_size = -1;  // odd; default (2W-1)x(2H-1)
  double direction = 0.0;  // radians, 0 = right
  double origin_value = 1.0;
  std::vector<double> ring = {2.0, 4.0, 12.0, 20.0};
  double far_ra = -1.0, far_rb = -1.0;  // default 0.2/0.4 * min(W,H)
  // Method.
  std::string method = "dilation";  // dilation | conv | chm | genmean
  double p = 100.0;
  double eps = 1e-30;
  std::string tnorm = "product";
  std::string norm_mode = "kernel_sum";
  int threads = 0;  // 0: RELMAP_THREADS or 1
  std::uint64_t seed = 0;
  std::string out = "out";
};

int effective_threads(const Config& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("RELMAP_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

TNorm parse_tnorm(const std::string& s) {
  if (s == "product") return TNorm::product;
  if (s == "minimum") return TNorm::minimum;
  throw std::invalid_argument("unknown t-norm: " + s);
}

ConvNormMode parse_mode(const std::string& s) {
  if (s == "kernel_sum") return ConvNormMode::kernel_sum;
  if (s == "none") return ConvNormMode::none;
  throw std::invalid_argument("unknown norm mode: " + s);
}

MembershipGrid build_source(const Config& cfg) {
  PixelCoord center{cfg.source_cx, cfg.source_cy};
  if (cfg.relation == "right") {
    if (center.col < 0) center.col = cfg.width / 5;
    if (center.row < 0) center.row = cfg.height / 2;
    return make_disk(cfg.width, cfg.height, center, cfg.source_radius);
  }
  if (center.col < 0) center.col = cfg.width / 2;
  if (center.row < 0) center.row = cfg.height / 2;
  if (cfg.relation == "inside")
    return make_square(cfg.width, cfg.height, center, cfg.source_side);
  if (cfg.relation == "close" || cfg.relation == "far")
    return make_disk(cfg.width, cfg.height, center, cfg.source_radius);
  throw std::invalid_argument("unknown relation: " + cfg.relation);
}

Kernel build_kernel(const Config& cfg) {
  Index sx = cfg.kernel_size > 0 ? cfg.kernel_size : 2 * cfg.width - 1;
  Index sy = cfg.kernel_size > 0 ? cfg.kernel_size : 2 * cfg.height - 1;
  if (cfg.relation == "right")
    return directional_kernel(sx, sy, cfg.direction, cfg.origin_value);
  if (cfg.relation == "close") {
    if (cfg.ring.size() != 4) throw std::invalid_argument("--ring needs four radii");
    return ring_kernel(sx, sy, cfg.ring[0], cfg.ring[1], cfg.ring[2], cfg.ring[3]);
  }
  if (cfg.relation == "far") {
    const double m = static_cast<double>(std::min(cfg.width, cfg.height));
    const double ra = cfg.far_ra >= 0 ? cfg.far_ra : 0.2 * m;
    const double rb = cfg.far_rb >= 0 ? cfg.far_rb : 0.4 * m;
    return far_kernel(sx, sy, ra, rb);
  }
  if (cfg.relation == "inside") {
    const Index s = cfg.kernel_size > 0 ? cfg.kernel_size : 1;
    return dot_kernel(s, s);
  }
  throw std::invalid_argument("unknown relation: " + cfg.relation);
}

MapMethod build_method(const Config& cfg) {
  if (cfg.method == "dilation") return ExactDilation{parse_tnorm(cfg.tnorm)};
  if (cfg.method == "conv") return Convolution{parse_mode(cfg.norm_mode)};
  if (cfg.method == "chm") return Chm{cfg.p, cfg.eps};
  if (cfg.method == "genmean") return GeneralizedMean{cfg.p, parse_tnorm(cfg.tnorm)};
  throw std::invalid_argument("unknown method: " + cfg.method);
}

void add_common_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--width", cfg.width, "image width in pixels");
  cmd->add_option("--height", cfg.height, "image height in pixels");
  cmd->add_option("--relation", cfg.relation, "right | close | far | inside");
  cmd->add_option("--method", cfg.method, "dilation | conv | chm | genmean");
  cmd->add_option("--source-radius", cfg.source_radius, "source disk radius");
  cmd->add_option("--source-side", cfg.source_side, "source square side (inside relation)");
  cmd->add_option("--source-cx", cfg.source_cx, "source center column");
  cmd->add_option("--source-cy", cfg.source_cy, "source center row");
  cmd->add_option("--kernel-size", cfg.kernel_size, "odd kernel support (default 2*dim-1)");
  cmd->add_option("--direction", cfg.direction, "direction in radians (right relation)");
  cmd->add_option("--origin-value", cfg.origin_value, "directional kernel origin weight");
  cmd->add_option("--ring", cfg.ring, "crown radii r1 r2 r3 r4 (close relation)")->expected(4);
  cmd->add_option("--far-ra", cfg.far_ra, "far kernel inner radius");
  cmd->add_option("--far-rb", cfg.far_rb, "far kernel saturation radius");
  cmd->add_option("--p", cfg.p, "exponent for chm/genmean");
  cmd->add_option("--eps", cfg.eps, "chm denominator guard");
  cmd->add_option("--tnorm", cfg.tnorm, "product | minimum");
  cmd->add_option("--norm-mode", cfg.norm_mode, "kernel_sum | none (conv)");
  cmd->add_option("--threads", cfg.threads, "worker threads (RELMAP_THREADS fallback)");
  cmd->add_option("--seed", cfg.seed, "seed for randomized inputs");
  cmd->add_option("--out", cfg.out, "output path prefix");
}

void run_map(const Config& cfg, bool diff) {
  const MembershipGrid source = build_source(cfg);
  const Kernel kernel = build_kernel(cfg);
  const MapMethod method = build_method(cfg);
  const int threads = effective_threads(cfg);
  const MembershipGrid phi = relational_map(source, kernel, method, threads);
  write_grid(cfg.out + "_phi.grid", phi);
  write_pgm(cfg.out + "_phi.pgm", phi);
  if (diff) {
    const MembershipGrid exact = dilate(source, kernel, TNorm::product, threads);
    const Array absdiff = (phi.values - exact.values).abs();
    write_grid(cfg.out + "_phidiff.grid", absdiff);
    write_pgm(cfg.out + "_phidiff.pgm", absdiff);
    std::cout << "mse " << format_double(mse(phi, exact)) << '\n';
  }
}

void run_heatmap(const Config& cfg, const std::string& target, double target_radius) {
  const MembershipGrid source = build_source(cfg);
  const Kernel kernel = build_kernel(cfg);
  const int threads = effective_threads(cfg);
  TargetShape shape = target == "pixel" ? TargetShape::single_pixel()
                                        : TargetShape::disk(target_radius);
  if (target != "pixel" && target != "disk")
    throw std::invalid_argument("unknown target shape: " + target);

  const std::vector<std::pair<std::string, MapMethod>> methods = {
      {"dilation", ExactDilation{parse_tnorm(cfg.tnorm)}},
      {"conv", Convolution{parse_mode(cfg.norm_mode)}},
      {"chm", Chm{cfg.p, cfg.eps}},
      {"genmean", GeneralizedMean{cfg.p, parse_tnorm(cfg.tnorm)}},
  };
  std::vector<MembershipGrid> heatmaps;
  for (const auto& [name, method] : methods) {
    MembershipGrid h =
        score_heatmap_from(relational_map(source, kernel, method, threads), shape, threads);
    write_grid(cfg.out + "_S_" + name + ".grid", h);
    write_pgm(cfg.out + "_S_" + name + ".pgm", h);
    heatmaps.push_back(std::move(h));
  }
  for (size_t i = 1; i < methods.size(); ++i) {
    const Array d = (heatmaps[i].values - heatmaps[0].values).abs();
    write_grid(cfg.out + "_Sdiff_" + methods[i].first + ".grid", d);
    write_pgm(cfg.out + "_Sdiff_" + methods[i].first + ".pgm", d);
  }
  for (const MidcutAxis axis : {MidcutAxis::mid_x, MidcutAxis::mid_y}) {
    const std::string axis_name = axis == MidcutAxis::mid_x ? "midx" : "midy";
    std::vector<std::vector<std::string>> rows;
    const Index n = axis == MidcutAxis::mid_x ? source.height() : source.width();
    std::vector<Eigen::ArrayXd> cuts;
    for (size_t i = 0; i < methods.size(); ++i) cuts.push_back(midcut(heatmaps[i], axis));
    for (Index r = 0; r < n; ++r) {
      std::vector<std::string> row{std::to_string(r)};
      for (const auto& cut : cuts) row.push_back(format_double(cut[r]));
      rows.push_back(std::move(row));
    }
    write_csv(cfg.out + "_" + axis_name + ".csv",
              {"index", "dilation", "conv", "chm", "genmean"}, rows);
  }
}

void run_grad(const Config& cfg, bool target_empty) {
  const Kernel kernel = build_kernel(cfg);
  const ConvNormMode mode = parse_mode(cfg.norm_mode);
  const int threads = effective_threads(cfg);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Array k(cfg.height, cfg.width), l(cfg.height, cfg.width);
  for (Index r = 0; r < cfg.height; ++r)
    for (Index c = 0; c < cfg.width; ++c) {
      k(r, c) = uni(rng);
      l(r, c) = target_empty ? 0.0 : uni(rng);
    }
  const MembershipGrid source(k), target(l);
  const GradientGrid gk = ds_dk(target, kernel, mode, threads);
  const GradientGrid gl = ds_dl(source, target, kernel, mode, threads);
  write_grid(cfg.out + "_ds_dk.grid", gk.values);
  write_grid(cfg.out + "_ds_dl.grid", gl.values);
  const double err_k = fd_check(
      [&](const Array& kk) {
        return score(conv_map(MembershipGrid(kk), kernel, mode), target);
      },
      k, gk);
  const double err_l = fd_check(
      [&](const Array& ll) {
        return score(conv_map(source, kernel, mode), MembershipGrid(ll));
      },
      l, gl);
  std::cout << "fd_rel_err_ds_dk " << format_double(err_k) << '\n'
            << "fd_rel_err_ds_dl " << format_double(err_l) << '\n';
}

void run_sweep(const Config& cfg, const std::vector<Index>& sizes,
               const std::vector<double>& p_values) {
  std::vector<BenchRecord> records;
  const int threads = effective_threads(cfg);
  for (Index side : sizes) {
    const TimingSetup setup = right_of_setup(side);
    auto recs = sweep_p(setup.source, setup.kernel, p_values, {},
                        "sweep_p_" + std::to_string(side), cfg.eps, threads);
    records.insert(records.end(), recs.begin(), recs.end());
  }
  write_bench_csv(cfg.out, records);
}

void run_timing(const Config& cfg, const std::vector<Index>& sizes, int repeats, int warmup) {
  // Single-threaded by design so the comparison measures algorithmic cost.
  write_bench_csv(cfg.out, timing(sizes, cfg.p, repeats, warmup));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy-morphology spatial-relation maps, scores and benchmarks"};
  app.require_subcommand(1);

  Config cfg;
  bool diff = false;
  bool target_empty = false;
  std::string target_shape = "disk";
  double target_radius = 5.0;
  std::vector<Index> sizes = {100, 200};
  std::vector<double> p_values = {1, 3, 10, 30, 100, 300};
  int repeats = 5, warmup = 1;

  CLI::App* cmd_map = app.add_subcommand("map", "compute a relational map Phi");
  add_common_options(cmd_map, cfg);
  cmd_map->add_flag("--diff", diff, "also write |Phi - Phi_dilation| and print the MSE");

  CLI::App* cmd_heatmap =
      app.add_subcommand("heatmap", "score heatmaps over target placements, all methods");
  add_common_options(cmd_heatmap, cfg);
  cmd_heatmap->add_option("--target", target_shape, "disk | pixel");
  cmd_heatmap->add_option("--target-radius", target_radius, "target disk radius");

  CLI::App* cmd_grad = app.add_subcommand("grad", "analytic gradients plus FD verification");
  add_common_options(cmd_grad, cfg);
  cmd_grad->add_flag("--target-empty", target_empty, "use an all-zero target (error fixture)");

  CLI::App* cmd_bench = app.add_subcommand("bench", "benchmark harness");
  cmd_bench->require_subcommand(1);
  CLI::App* cmd_sweep = cmd_bench->add_subcommand("sweep-p", "MSE vs p sweep");
  add_common_options(cmd_sweep, cfg);
  cmd_sweep->add_option("--sizes", sizes, "image sides");
  cmd_sweep->add_option("--p-values", p_values, "exponents to sweep");
  CLI::App* cmd_timing = cmd_bench->add_subcommand("timing", "wall-clock timing of all methods");
  add_common_options(cmd_timing, cfg);
  cmd_timing->add_option("--sizes", sizes, "image sides");
  cmd_timing->add_option("--repeats", repeats, "timed repeats per cell");
  cmd_timing->add_option("--warmup", warmup, "warmup runs per cell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_map->parsed()) {
      run_map(cfg, diff);
    } else if (cmd_heatmap->parsed()) {
      run_heatmap(cfg, target_shape, target_radius);
    } else if (cmd_grad->parsed()) {
      // Gradient checks default to the small instance size used by the
      // verification suite unless dimensions were given explicitly.
      if (!cmd_grad->count("--width")) cfg.width = 10;
      if (!cmd_grad->count("--height")) cfg.height = 10;
      if (!cmd_grad->count("--kernel-size") && cfg.relation != "inside")
        cfg.kernel_size = 2 * std::max(cfg.width, cfg.height) - 1;
      run_grad(cfg, target_empty);
    } else if (cmd_sweep->parsed()) {
      if (!cmd_sweep->count("--out")) cfg.out = "sweep.csv";
      run_sweep(cfg, sizes, p_values);
    } else if (cmd_timing->parsed()) {
      if (!cmd_timing->count("--out")) cfg.out = "timing.csv";
      run_timing(cfg, sizes, repeats, warmup);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const relmap::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
