/*
 * Evaluation-matrix checks: row counts per multiplicity, a hand-computed
 * condition row, shapes, deterministic sampling, agreement between the
 * homogeneous and affine row schemes, and rank monotonicity under adding
 * points.
 */

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fatpoints/interpolation.hpp"
#include "fatpoints/monomials.hpp"
#include "fatpoints/prime_field.hpp"
#include "fatpoints/rank.hpp"
#include "fatpoints/rng.hpp"
#include "fatpoints/scheme.hpp"

using fatpoints::build_matrix;
using fatpoints::build_matrix_affine;
using fatpoints::condition_rows;
using fatpoints::FatPointConfig;
using fatpoints::monomials;
using fatpoints::MultiIndex;
using fatpoints::PointSample;
using fatpoints::PrimeField;
using fatpoints::quadruple_config;
using fatpoints::sample_points;
using fatpoints::SplitMix64;

namespace {

std::size_t column_of(const std::vector<MultiIndex>& cols, const MultiIndex& target) {
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (cols[i] == target) return i;
  throw std::logic_error("column_of: monomial not found");
}

}  // namespace

TEST_CASE("an m-point contributes binom(m+2, 3) rows") {
  const PrimeField field;
  const PointSample P{{3, 5, 7, 1}};
  for (int m = 1; m <= 13; ++m) {
    const auto rows = condition_rows(P, m, 12, field);
    REQUIRE(rows.size() == static_cast<std::size_t>(fatpoints::binom(m + 2, 3)));
    REQUIRE(rows[0].size() == static_cast<std::size_t>(fatpoints::series_size(3, 12)));
  }
}

TEST_CASE("condition row of a double point at a coordinate point") {
  const PrimeField field;
  const PointSample P{{1, 0, 0, 0}};
  const auto rows = condition_rows(P, 2, 3, field);
  const auto cols = monomials(3, 3);
  REQUIRE(rows.size() == 4);

  // Order alpha = (0,0,0,1): only beta = (2,0,0,1) survives, with value
  // fall(1,1) * 1^2 = 1.
  const auto& last = rows[3];
  long long nonzero = 0, sum = 0;
  for (auto v : last) {
    nonzero += v != 0;
    sum += v;
  }
  REQUIRE(nonzero == 1);
  REQUIRE(sum == 1);
  REQUIRE(last[column_of(cols, MultiIndex{2, 0, 0, 1})] == 1);

  // Order alpha = (1,0,0,0): only beta = (3,0,0,0) survives, value fall(3,1) = 3.
  REQUIRE(rows[0][column_of(cols, MultiIndex{3, 0, 0, 0})] == 3);
  REQUIRE(rows[1][column_of(cols, MultiIndex{2, 1, 0, 0})] == 1);
  REQUIRE(rows[2][column_of(cols, MultiIndex{2, 0, 1, 0})] == 1);
}

TEST_CASE("condition_rows validates the degree bounds") {
  const PointSample P{{3, 5, 7, 1}};
  REQUIRE_THROWS_AS(condition_rows(P, 2, 31, PrimeField(31)), std::invalid_argument);
  REQUIRE_NOTHROW(condition_rows(P, 2, 30, PrimeField(31)));
  REQUIRE_THROWS_AS(condition_rows(P, 5, 3, PrimeField()), std::invalid_argument);
}

TEST_CASE("sampled points are distinct chart points") {
  const PrimeField field;
  const auto pts = sample_points(50, 3, field, 2024);
  REQUIRE(pts.size() == 50);
  std::set<PointSample> seen(pts.begin(), pts.end());
  REQUIRE(seen.size() == 50);
  for (const auto& pt : pts) {
    REQUIRE(pt.coords.size() == 4);
    REQUIRE(pt.coords[3] == 1);
    for (int j = 0; j < 3; ++j) REQUIRE(pt.coords[j] < field.p());
  }
  REQUIRE(sample_points(50, 3, field, 2024) == pts);
  REQUIRE(sample_points(50, 3, field, 2025) != pts);
  // Prefix stability: the first k points do not depend on the count.
  const auto prefix = sample_points(10, 3, field, 2024);
  for (int i = 0; i < 10; ++i) REQUIRE(prefix[i] == pts[i]);
}

TEST_CASE("matrix shapes follow length and series size") {
  const PrimeField field;
  const auto cubic = build_matrix(quadruple_config(3, 0, 0, 0, 5), field, 7);
  REQUIRE(cubic.matrix.rows == 20);
  REQUIRE(cubic.matrix.cols == 20);
  REQUIRE(cubic.points.size() == 5);

  const auto nine = build_matrix(quadruple_config(10, 9, 0, 0, 0), field, 7);
  REQUIRE(nine.matrix.rows == 315);
  REQUIRE(nine.matrix.cols == 286);
  REQUIRE(nine.points.size() == 9);

  const auto empty = build_matrix(FatPointConfig(3, 4, {}), field, 7);
  REQUIRE(empty.matrix.rows == 0);
  REQUIRE(empty.matrix.cols == 35);

  REQUIRE(build_matrix(quadruple_config(3, 0, 0, 0, 5), field, 7).matrix == cubic.matrix);
}

TEST_CASE("homogeneous and affine row schemes have equal rank") {
  const PrimeField field;
  SplitMix64 rng(0x51);
  for (int trial = 0; trial < 8; ++trial) {
    const int d = 2 + static_cast<int>(rng.next() % 5);  // 2..6
    std::vector<std::pair<int, long long>> spec;
    long long budget = 40;
    while (budget > 0) {
      const int m = 1 + static_cast<int>(rng.next() % std::min(3, d));  // m-1 <= d
      const long long len = fatpoints::point_length(3, m);
      if (len > budget) break;
      spec.emplace_back(m, 1);
      budget -= len;
    }
    const FatPointConfig c(3, d, std::move(spec));
    const uint64_t seed = rng.next();
    const auto hom = build_matrix(c, field, seed);
    const auto aff = build_matrix_affine(c, field, seed);
    REQUIRE(hom.matrix.rows == aff.rows);
    REQUIRE(hom.matrix.cols == aff.cols);
    REQUIRE(fatpoints::rank(hom.matrix, field) == fatpoints::rank(aff, field));
  }
}

TEST_CASE("rank is monotone when points are added") {
  const PrimeField field;
  SplitMix64 rng(0x52);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 3 + static_cast<int>(rng.next() % 4);  // 3..6
    const long long z = 1 + static_cast<long long>(rng.next() % 4);
    const long long y = rng.next() % 3;
    const FatPointConfig small = quadruple_config(d, 0, 0, y, z);
    const FatPointConfig large = quadruple_config(d, 0, 0, y, z + 1);
    const auto rs = fatpoints::rank(build_matrix(small, field, rng.next()).matrix, field);
    const auto rl = fatpoints::rank(build_matrix(large, field, rng.next()).matrix, field);
    REQUIRE(rs <= rl);
  }
}

TEST_CASE("dump format is header plus one line per row") {
  fatpoints::DenseMatrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 2) = 5;
  m.at(1, 1) = 31990;
  std::ostringstream os;
  fatpoints::dump_matrix(m, 31991, os);
  REQUIRE(os.str() == "2 3 31991\n1 0 5\n0 31990 0\n");
}
