#include "relmap/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

namespace relmap {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& token) {
  double v = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc() || res.ptr != end)
    throw std::invalid_argument("not a number: '" + token + "'");
  return v;
}

namespace {

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

}  // namespace

void write_grid(const std::string& path, const Array& grid) {
  std::ofstream out = open_out(path);
  out << "RELGRID 1\n" << grid.cols() << ' ' << grid.rows() << '\n';
  for (Index r = 0; r < grid.rows(); ++r) {
    for (Index c = 0; c < grid.cols(); ++c) {
      if (c) out << ' ';
      out << format_double(grid(r, c));
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

Array read_grid(const std::string& path, bool raw) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  long lineno = 0;
  std::string line;
  auto next_line = [&]() {
    if (!std::getline(in, line)) throw ParseError("unexpected end of file", lineno + 1);
    ++lineno;
  };
  next_line();
  if (line != "RELGRID 1") throw ParseError("bad magic, expected 'RELGRID 1'", lineno);
  next_line();
  long w = 0, h = 0;
  {
    std::istringstream dims(line);
    std::string extra;
    if (!(dims >> w >> h) || (dims >> extra) || w < 1 || h < 1)
      throw ParseError("bad dimension line '" + line + "'", lineno);
  }
  Array grid(h, w);
  for (long r = 0; r < h; ++r) {
    next_line();
    std::istringstream row(line);
    std::string token;
    for (long c = 0; c < w; ++c) {
      if (!(row >> token)) throw ParseError("row has fewer than " + std::to_string(w) + " values", lineno);
      double v;
      try {
        v = parse_double(token);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno);
      }
      if (!raw && !(v >= 0.0 && v <= 1.0))
        throw ParseError("value " + token + " outside [0,1] (use raw mode for unbounded grids)",
                         lineno);
      grid(r, c) = v;
    }
    std::string extra;
    if (row >> extra) throw ParseError("row has more than " + std::to_string(w) + " values", lineno);
  }
  return grid;
}

void write_pgm(const std::string& path, const Array& grid) {
  bool clamped = false;
  std::ofstream out = open_out(path, std::ios::binary);
  out << "P5\n" << grid.cols() << ' ' << grid.rows() << "\n65535\n";
  for (Index r = 0; r < grid.rows(); ++r) {
    for (Index c = 0; c < grid.cols(); ++c) {
      double v = grid(r, c);
      if (std::isnan(v)) v = 0.0;
      if (v < 0.0 || v > 1.0) {
        clamped = true;
        v = std::clamp(v, 0.0, 1.0);
      }
      const auto sample = static_cast<uint16_t>(std::lround(v * 65535.0));
      const char bytes[2] = {static_cast<char>(sample >> 8), static_cast<char>(sample & 0xff)};
      out.write(bytes, 2);
    }
  }
  if (clamped) std::cerr << "warning: values outside [0,1] clamped in " << path << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out = open_out(path);
  auto emit = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_series_csv(const std::string& path, const Eigen::ArrayXd& values,
                      const std::string& value_name) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(static_cast<size_t>(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i)
    rows.push_back({std::to_string(i), format_double(values[i])});
  write_csv(path, {"index", value_name}, rows);
}

void write_bench_csv(const std::string& path, const std::vector<BenchRecord>& records) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(records.size());
  for (const auto& rec : records)
    rows.push_back({rec.experiment, rec.method, format_double(rec.param),
                    format_double(rec.metric), format_double(rec.metric_min),
                    std::to_string(rec.repeats)});
  write_csv(path, {"experiment", "method", "param", "metric", "metric_min", "repeats"}, rows);
}

}  // namespace relmap
