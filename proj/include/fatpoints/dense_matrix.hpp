#pragma once

/**
 * Dense row-major matrices: entries over F_p (16-bit storage, p < 2^15) and
 * an exact-rational mirror used by the elimination oracle.
 */

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fatpoints {

struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<uint16_t> entries;  // row-major, each value in [0, p)

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}

  uint16_t& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  uint16_t at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  bool operator==(const DenseMatrix&) const = default;
};

struct ExactMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpq_class> entries;  // row-major, exact rationals

  ExactMatrix() = default;
  ExactMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, mpq_class(0)) {}

  mpq_class& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const mpq_class& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

// Lifts values in [0, p) to the integers; the exact rank of the lift bounds
// the mod-p rank from above and certifies full rank over the rationals.
inline ExactMatrix lift_to_exact(const DenseMatrix& m) {
  ExactMatrix e(m.rows, m.cols);
  for (std::size_t i = 0; i < m.entries.size(); ++i) e.entries[i] = static_cast<unsigned long>(m.entries[i]);
  return e;
}

}  // namespace fatpoints
