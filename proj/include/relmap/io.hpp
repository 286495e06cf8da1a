#pragma once

#include <string>
#include <vector>

#include "relmap/bench.hpp"
#include "relmap/grid.hpp"

namespace relmap {

/// Shortest decimal representation that round-trips the exact double.
/// NaN renders as "nan".
std::string format_double(double v);

/// Parses a token produced by format_double. Throws on trailing garbage.
double parse_double(const std::string& token);

/// Writes the textual grid format:
///   RELGRID 1
///   <width> <height>
///   <height> lines of <width> space-separated reals
void write_grid(const std::string& path, const Array& grid);
inline void write_grid(const std::string& path, const MembershipGrid& grid) {
  write_grid(path, grid.values);
}

/// Parses a grid file. Unless `raw`, values must be finite and in [0,1];
/// raw mode accepts any real plus "nan" (gradients, unnormalized maps).
Array read_grid(const std::string& path, bool raw = false);

/// Binary 16-bit PGM ("P5", maxval 65535, big-endian samples), value v mapped
/// to round(v * 65535). Values outside [0,1] are clamped with a warning on
/// stderr.
void write_pgm(const std::string& path, const Array& grid);
inline void write_pgm(const std::string& path, const MembershipGrid& grid) {
  write_pgm(path, grid.values);
}

/// Comma-separated file: header row then one row per record.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// (index, value) rows for 1D cuts.
void write_series_csv(const std::string& path, const Eigen::ArrayXd& values,
                      const std::string& value_name = "value");

/// Columns: experiment, method, param, metric, metric_min, repeats.
void write_bench_csv(const std::string& path, const std::vector<BenchRecord>& records);

}  // namespace relmap
