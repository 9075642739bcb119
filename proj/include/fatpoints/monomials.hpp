#pragma once

/**
 * Degree-d monomial enumeration in n+1 variables, graded reverse
 * lexicographic, descending from x0^d. The order is fixed so that matrices
 * rebuilt from a certificate are entry-identical; rank itself is order-free.
 */

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fatpoints {

using MultiIndex = std::vector<int>;  // exponents, length n+1

// grevlex: a precedes b iff the last nonzero entry of a-b is negative.
inline bool grevlex_precedes(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    int diff = a[i] - b[i];
    if (diff != 0) return diff < 0;
  }
  return false;
}

namespace detail {
inline void enumerate_exponents(int vars_left, int remaining, MultiIndex& acc, std::vector<MultiIndex>& out) {
  if (vars_left == 1) {
    acc.push_back(remaining);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    acc.push_back(e);
    enumerate_exponents(vars_left - 1, remaining - e, acc, out);
    acc.pop_back();
  }
}
}  // namespace detail

// All weight-d multi-indices in n+1 variables, grevlex descending;
// size binom(n+d, n).
inline std::vector<MultiIndex> monomials(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("monomials: need n >= 1, d >= 0");
  std::vector<MultiIndex> out;
  MultiIndex acc;
  detail::enumerate_exponents(n + 1, d, acc, out);
  // precedes = grevlex-greater, so sorting directly yields x0^d first.
  std::sort(out.begin(), out.end(), grevlex_precedes);
  return out;
}

}  // namespace fatpoints
