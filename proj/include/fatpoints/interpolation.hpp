#pragma once

/**
 * Evaluation matrices: the linear conditions a fat-point union imposes on
 * degree-d forms, evaluated at deterministic pseudorandom points of P^3(F_p).
 *
 * An m-point at P contributes one row per derivative order alpha with
 * |alpha| = m-1; since p > d these homogeneous rows span the same conditions
 * as all affine derivatives of order <= m-1 (Euler identity), with the same
 * row count binom(m+2, 3). Points sit in the affine chart x3 = 1.
 */

#include "fatpoints/dense_matrix.hpp"
#include "fatpoints/monomials.hpp"
#include "fatpoints/prime_field.hpp"
#include "fatpoints/rng.hpp"
#include "fatpoints/scheme.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>
#include <vector>

namespace fatpoints {

struct PointSample {
  std::vector<uint32_t> coords;  // length n+1, last coordinate 1

  bool operator==(const PointSample&) const = default;
  bool operator<(const PointSample& o) const { return coords < o.coords; }
};

struct EvaluationMatrix {
  DenseMatrix matrix;
  FatPointConfig config;
  uint32_t prime = 0;
  uint64_t seed = 0;
  std::vector<PointSample> points;
};

namespace detail {

// fall(b, a) = b (b-1) ... (b-a+1) mod p; zero when b < a.
struct FallingFactorials {
  std::vector<std::vector<uint32_t>> table;  // [b][a], b <= bmax, a <= amax

  FallingFactorials(int bmax, int amax, const PrimeField& f) : table(bmax + 1, std::vector<uint32_t>(amax + 1)) {
    for (int b = 0; b <= bmax; ++b) {
      table[b][0] = 1;
      for (int a = 1; a <= amax; ++a) {
        long long factor = b - a + 1;
        table[b][a] = factor <= 0 ? 0 : f.mul(table[b][a - 1], f.from_int(factor));
      }
    }
  }

  uint32_t operator()(int b, int a) const { return table[b][a]; }
};

// coord^e tables for one point.
inline std::vector<std::vector<uint32_t>> power_table(const PointSample& pt, int emax, const PrimeField& f) {
  std::vector<std::vector<uint32_t>> pow(pt.coords.size(), std::vector<uint32_t>(emax + 1, 1));
  for (std::size_t i = 0; i < pt.coords.size(); ++i)
    for (int e = 1; e <= emax; ++e) pow[i][e] = f.mul(pow[i][e - 1], pt.coords[i]);
  return pow;
}

}  // namespace detail

// Rows of one m-point at P: entry at column beta for condition alpha is
// prod_i fall(beta_i, alpha_i) * P^(beta - alpha), zero unless beta >= alpha
// componentwise. Requires p > d and d >= m-1.
inline std::vector<std::vector<uint16_t>> condition_rows(const PointSample& P, int m, int d, const PrimeField& field) {
  const int n = static_cast<int>(P.coords.size()) - 1;
  if (static_cast<int>(field.p()) <= d) throw std::invalid_argument("condition_rows: need p > d");
  if (d < m - 1) throw std::invalid_argument("condition_rows: need d >= m-1");
  const auto cols = monomials(n, d);
  const auto orders = monomials(n, m - 1);
  const detail::FallingFactorials fall(d, m - 1, field);
  const auto pow = detail::power_table(P, d, field);

  std::vector<std::vector<uint16_t>> rows(orders.size(), std::vector<uint16_t>(cols.size(), 0));
  for (std::size_t r = 0; r < orders.size(); ++r) {
    const auto& alpha = orders[r];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& beta = cols[c];
      uint32_t val = 1;
      for (int i = 0; i <= n; ++i) {
        if (beta[i] < alpha[i]) {
          val = 0;
          break;
        }
        val = field.mul(val, fall(beta[i], alpha[i]));
        if (val == 0) break;
        val = field.mul(val, pow[i][beta[i] - alpha[i]]);
        if (val == 0) break;
      }
      rows[r][c] = static_cast<uint16_t>(val);
    }
  }
  return rows;
}

// Samples `count` pairwise-distinct points of the chart x_n = 1, one derived
// stream per point index so the set depends only on (seed, count, p).
inline std::vector<PointSample> sample_points(long long count, int n, const PrimeField& field, uint64_t seed) {
  std::vector<PointSample> pts;
  std::set<PointSample> seen;
  constexpr int kMaxDrawsPerPoint = 1000;
  for (long long i = 0; i < count; ++i) {
    SplitMix64 stream(derive_seed(seed, static_cast<uint64_t>(i)));
    PointSample pt;
    int draws = 0;
    do {
      if (++draws > kMaxDrawsPerPoint) throw std::runtime_error("sample_points: could not find distinct points");
      pt.coords.assign(n + 1, 1);
      for (int j = 0; j < n; ++j) pt.coords[j] = static_cast<uint32_t>(uniform_below(stream, field.p()));
    } while (!seen.insert(pt).second);
    pts.push_back(std::move(pt));
  }
  return pts;
}

// Stacks the condition rows of every point of the configuration.
// Deterministic in (config, prime, seed); rows follow the normalized spec
// order (multiplicities descending), points in sampling order.
inline EvaluationMatrix build_matrix(const FatPointConfig& c, const PrimeField& field, uint64_t seed) {
  EvaluationMatrix out;
  out.config = c;
  out.prime = field.p();
  out.seed = seed;
  out.points = sample_points(c.total_points(), c.n, field, seed);

  const std::size_t rows = static_cast<std::size_t>(c.length());
  const std::size_t cols = static_cast<std::size_t>(series_size(c.n, c.d));
  out.matrix = DenseMatrix(rows, cols);

  std::size_t next_row = 0, next_point = 0;
  for (auto& [m, cnt] : c.spec) {
    for (long long k = 0; k < cnt; ++k) {
      auto block = condition_rows(out.points[next_point++], m, c.d, field);
      for (auto& row : block) {
        std::copy(row.begin(), row.end(), &out.matrix.entries[next_row * cols]);
        ++next_row;
      }
    }
  }
  return out;
}

// Affine-chart variant used to cross-check the homogeneous row scheme: same
// points, rows indexed by all derivative orders of total degree <= m-1 in the
// n chart variables. Same row count and, for p > d, the same rank.
inline DenseMatrix build_matrix_affine(const FatPointConfig& c, const PrimeField& field, uint64_t seed) {
  if (static_cast<int>(field.p()) <= c.d) throw std::invalid_argument("build_matrix_affine: need p > d");
  const auto points = sample_points(c.total_points(), c.n, field, seed);
  const auto cols = monomials(c.n, c.d);
  const std::size_t ncols = cols.size();
  DenseMatrix m(static_cast<std::size_t>(c.length()), ncols);

  std::size_t next_row = 0, next_point = 0;
  for (auto& [mult, cnt] : c.spec) {
    if (c.d < mult - 1) throw std::invalid_argument("build_matrix_affine: need d >= m-1");
    const detail::FallingFactorials fall(c.d, mult - 1, field);
    for (long long k = 0; k < cnt; ++k) {
      const auto& P = points[next_point++];
      const auto pow = detail::power_table(P, c.d, field);
      // orders: total degree 0 .. m-1 in the first n variables
      for (int t = 0; t <= mult - 1; ++t) {
        for (const auto& gamma_full : monomials(c.n - 1, t)) {
          for (std::size_t cc = 0; cc < ncols; ++cc) {
            const auto& beta = cols[cc];
            uint32_t val = 1;
            for (int i = 0; i < c.n; ++i) {
              int g = gamma_full[i];
              if (beta[i] < g) {
                val = 0;
                break;
              }
              val = field.mul(val, fall(beta[i], g));
              if (val == 0) break;
              val = field.mul(val, pow[i][beta[i] - g]);
              if (val == 0) break;
            }
            m.at(next_row, cc) = static_cast<uint16_t>(val);
          }
          ++next_row;
        }
      }
    }
  }
  return m;
}

// Audit dump: header "rows cols p", then one row of integers per line.
inline void dump_matrix(const DenseMatrix& m, uint32_t p, std::ostream& os) {
  os << m.rows << ' ' << m.cols << ' ' << p << '\n';
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) os << (j ? " " : "") << m.at(i, j);
    os << '\n';
  }
}

}  // namespace fatpoints
