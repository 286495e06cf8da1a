#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "relmap/io.hpp"
#include "test_util.hpp"

using namespace relmap;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("relmap_io_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Minimal CSV reader used only to round-trip what the writers emit.
std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_CASE("grid round-trip is exact") {
  TempDir tmp;
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const Array g = testutil::random_array(rng, 5, 7);
    write_grid(tmp.file("g.grid"), g);
    const Array back = read_grid(tmp.file("g.grid"));
    CHECK((back == g).all());
  }
  // Raw grids round-trip signed and out-of-range values.
  const Array raw = testutil::random_array(rng, 4, 4, -3.0, 3.0);
  write_grid(tmp.file("raw.grid"), raw);
  CHECK((read_grid(tmp.file("raw.grid"), true) == raw).all());
}

TEST_CASE("grid parse errors carry line numbers") {
  TempDir tmp;
  {
    std::ofstream out(tmp.file("bad_magic.grid"));
    out << "NOTAGRID\n1 1\n0\n";
  }
  CHECK_THROWS_AS(read_grid(tmp.file("bad_magic.grid")), ParseError);

  {
    std::ofstream out(tmp.file("short_row.grid"));
    out << "RELGRID 1\n3 3\n0 0 0\n0 0\n0 0 0\n";
  }
  try {
    read_grid(tmp.file("short_row.grid"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }

  {
    std::ofstream out(tmp.file("bad_token.grid"));
    out << "RELGRID 1\n2 1\n0 abc\n";
  }
  CHECK_THROWS_AS(read_grid(tmp.file("bad_token.grid")), ParseError);

  {
    std::ofstream out(tmp.file("extra.grid"));
    out << "RELGRID 1\n2 1\n0 0 0\n";
  }
  CHECK_THROWS_AS(read_grid(tmp.file("extra.grid")), ParseError);
}

TEST_CASE("grid range validation honors raw mode") {
  TempDir tmp;
  {
    std::ofstream out(tmp.file("over.grid"));
    out << "RELGRID 1\n1 1\n1.0000001\n";
  }
  CHECK_THROWS_AS(read_grid(tmp.file("over.grid")), ParseError);
  CHECK(read_grid(tmp.file("over.grid"), true)(0, 0) == doctest::Approx(1.0000001));

  {
    std::ofstream out(tmp.file("nan.grid"));
    out << "RELGRID 1\n1 1\nnan\n";
  }
  CHECK_THROWS_AS(read_grid(tmp.file("nan.grid")), ParseError);
  CHECK(std::isnan(read_grid(tmp.file("nan.grid"), true)(0, 0)));
}

TEST_CASE("format_double round-trips and renders nan") {
  std::mt19937_64 rng(72);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double v = uni(rng);
    CHECK(parse_double(format_double(v)) == v);
  }
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_double(0.1) == "0.1");
  CHECK_THROWS(parse_double("12x"));
}

TEST_CASE("pgm output bytes") {
  TempDir tmp;
  write_pgm(tmp.file("zero.pgm"), Array::Zero(2, 3));
  const std::string zero = slurp(tmp.file("zero.pgm"));
  CHECK(zero == std::string("P5\n3 2\n65535\n") + std::string(12, '\0'));

  write_pgm(tmp.file("one.pgm"), Array::Ones(1, 2));
  const std::string one = slurp(tmp.file("one.pgm"));
  CHECK(one.substr(one.size() - 4) == "\xff\xff\xff\xff");

  write_pgm(tmp.file("half.pgm"), Array::Constant(1, 1, 0.5));
  const std::string half = slurp(tmp.file("half.pgm"));
  // round(0.5 * 65535) = 32768 = 0x8000 big-endian
  CHECK(static_cast<unsigned char>(half[half.size() - 2]) == 0x80);
  CHECK(static_cast<unsigned char>(half[half.size() - 1]) == 0x00);

  // Determinism: identical inputs give identical bytes.
  write_pgm(tmp.file("zero2.pgm"), Array::Zero(2, 3));
  CHECK(slurp(tmp.file("zero2.pgm")) == zero);
}

TEST_CASE("csv writers") {
  TempDir tmp;
  write_csv(tmp.file("empty.csv"), {"a", "b"}, {});
  CHECK(slurp(tmp.file("empty.csv")) == "a,b\n");

  Eigen::ArrayXd series(3);
  series << 0.25, 0.5, 1.0;
  write_series_csv(tmp.file("series.csv"), series);
  const auto rows = read_csv(tmp.file("series.csv"));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"index", "value"});
  CHECK(parse_double(rows[2][1]) == 0.5);

  std::vector<BenchRecord> records = {
      {"sweep", "chm", 100.0, 0.012345678901234567, std::numeric_limits<double>::quiet_NaN(), 1},
      {"timing", "conv", 200.0, 0.5, 0.25, 5},
  };
  write_bench_csv(tmp.file("bench.csv"), records);
  const auto brows = read_csv(tmp.file("bench.csv"));
  REQUIRE(brows.size() == 3);
  for (size_t i = 0; i < records.size(); ++i) {
    const auto& row = brows[i + 1];
    CHECK(row[0] == records[i].experiment);
    CHECK(row[1] == records[i].method);
    CHECK(parse_double(row[2]) == records[i].param);
    CHECK(parse_double(row[3]) == records[i].metric);
    CHECK(std::stoi(row[5]) == records[i].repeats);
  }
  CHECK(std::isnan(parse_double(brows[1][4])));
  CHECK(parse_double(brows[2][4]) == 0.25);
}
