#pragma once

/**
 * Dense rank over F_p and the exact-rational rank oracle.
 *
 * Mod p: in-place Gaussian elimination, pivoting on the first nonzero entry
 * of the current column. Exact: rows are cleared to integers by their
 * denominator lcm, then eliminated fraction-free (Bareiss); every division is
 * exact by the minor identity, so no rounding occurs at any step.
 */

#include "fatpoints/dense_matrix.hpp"
#include "fatpoints/prime_field.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <vector>

namespace fatpoints {

// Consumes the matrix. Kept separate so sweeps can avoid one copy per case.
inline std::size_t rank_destructive(DenseMatrix& m, const PrimeField& field) {
  const std::size_t rows = m.rows, cols = m.cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = col; j < cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    const uint32_t pivinv = field.inv(m.at(r, col));
    uint16_t* prow = &m.at(r, 0);
    for (std::size_t i = r + 1; i < rows; ++i) {
      uint16_t* irow = &m.at(i, 0);
      if (irow[col] == 0) continue;
      const uint32_t f = field.mul(irow[col], pivinv);
      irow[col] = 0;
      for (std::size_t j = col + 1; j < cols; ++j)
        irow[j] = static_cast<uint16_t>(field.mul_sub(irow[j], f, prow[j]));
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const DenseMatrix& m, const PrimeField& field) {
  DenseMatrix copy = m;
  return rank_destructive(copy, field);
}

// Exact rank over Q via fraction-free elimination on integer rows.
inline std::size_t rank_exact(const ExactMatrix& m) {
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class scaled = m.at(i, j) * lcm;
      a[i * cols + j] = scaled.get_num();  // denominator is 1 after scaling
    }
  }

  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };
  mpz_class prev = 1;
  mpz_class t;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = col; j < cols; ++j) std::swap(at(r, j), at(piv, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        t = at(r, col) * at(i, j) - at(i, col) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = at(r, col);
    ++r;
  }
  return r;
}

}  // namespace fatpoints
