#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <string>

namespace relmap {

// Row-major so in-memory layout matches the row-major file formats.
using Array = Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

/// (col, row) with origin at the top-left corner; col runs along the X axis.
struct PixelCoord {
  Index col = 0;
  Index row = 0;
};

struct InvalidDimension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidKernel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyTarget : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, long line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
  long line;
};

/// Splits [0, rows) into contiguous chunks and runs body(begin, end) on each.
/// threads <= 1 runs inline; chunk boundaries never affect results because
/// callers only write disjoint rows.
void parallel_rows(Index rows, int threads, const std::function<void(Index, Index)>& body);

}  // namespace relmap
