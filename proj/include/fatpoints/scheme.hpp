#pragma once

/**
 * Combinatorics of fat-point configurations in P^n.
 *
 * A configuration is a degree d plus a multiset of (multiplicity, count)
 * pairs; an m-point contributes binom(n+m-1, n) linear conditions on the
 * binom(n+d, n) coefficients of a degree-d form. Good postulation means the
 * conditions are independent: rank = min(length, N).
 */

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fatpoints {

inline long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long acc = 1;
  for (long long i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

// Conditions imposed by one m-point in P^n.
inline long long point_length(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("point_length: need n >= 1, m >= 1");
  return binom(n + m - 1, n);
}

// Coefficients of a degree-d form in P^n.
inline long long series_size(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("series_size: need n >= 1, d >= 0");
  return binom(n + d, n);
}

struct FatPointConfig {
  int n = 3;
  int d = 0;
  std::vector<std::pair<int, long long>> spec;  // (multiplicity, count), sorted descending, counts > 0

  FatPointConfig() = default;

  FatPointConfig(int n_, int d_, std::vector<std::pair<int, long long>> spec_) : n(n_), d(d_), spec(std::move(spec_)) {
    normalize();
  }

  // Drops zero counts, merges repeated multiplicities, sorts descending.
  void normalize() {
    if (n < 1 || d < 0) throw std::invalid_argument("config: need n >= 1, d >= 0");
    std::vector<std::pair<int, long long>> merged;
    std::sort(spec.begin(), spec.end(), [](auto& a, auto& b) { return a.first > b.first; });
    for (auto& [m, c] : spec) {
      if (m < 1) throw std::invalid_argument("config: multiplicity must be >= 1");
      if (c < 0) throw std::invalid_argument("config: count must be >= 0");
      if (c == 0) continue;
      if (!merged.empty() && merged.back().first == m)
        merged.back().second += c;
      else
        merged.emplace_back(m, c);
    }
    spec = std::move(merged);
  }

  long long length() const {
    long long acc = 0;
    for (auto& [m, c] : spec) acc += c * point_length(n, m);
    return acc;
  }

  long long total_points() const {
    long long acc = 0;
    for (auto& [m, c] : spec) acc += c;
    return acc;
  }

  long long count_of(int m) const {
    for (auto& [mm, c] : spec)
      if (mm == m) return c;
    return 0;
  }

  int max_multiplicity() const { return spec.empty() ? 0 : spec.front().first; }

  // Canonical text form, e.g. "d=10 n=3 5^9" or "d=22 n=3 10^1 5^2 2^4".
  std::string to_string() const {
    std::ostringstream os;
    os << "d=" << d << " n=" << n;
    for (auto& [m, c] : spec) os << ' ' << m << '^' << c;
    return os.str();
  }

  static FatPointConfig parse(std::string_view text) {
    std::istringstream is{std::string(text)};
    int n = -1, d = -1;
    std::vector<std::pair<int, long long>> spec;
    std::string tok;
    while (is >> tok) {
      if (tok.rfind("d=", 0) == 0)
        d = std::stoi(tok.substr(2));
      else if (tok.rfind("n=", 0) == 0)
        n = std::stoi(tok.substr(2));
      else {
        auto caret = tok.find('^');
        int m = std::stoi(tok.substr(0, caret));
        long long c = caret == std::string::npos ? 1 : std::stoll(tok.substr(caret + 1));
        spec.emplace_back(m, c);
      }
    }
    if (d < 0 || n < 1) throw std::invalid_argument("config text must contain d= and n=");
    return FatPointConfig(n, d, std::move(spec));
  }

  bool operator==(const FatPointConfig&) const = default;
};

// Convenience for the P^3 quadruple notation used throughout the sweeps.
inline FatPointConfig quadruple_config(int d, long long w, long long x, long long y, long long z, long long tens = 0,
                                       long long thirteens = 0) {
  return FatPointConfig(3, d, {{13, thirteens}, {10, tens}, {5, w}, {4, x}, {3, y}, {2, z}});
}

inline long long virtual_dimension(const FatPointConfig& c) { return series_size(c.n, c.d) - c.length() - 1; }

// Window margin above N in the reduction lemma; branches are exclusive and
// exhaustive on nonzero quadruples.
inline int delta_bound(long long w, long long x, long long y, long long z) {
  if (z > 0) return 1;
  if (y > 0) return 4;
  if (x > 0) return 8;
  if (w > 0) return 13;
  throw std::invalid_argument("delta_bound: all-zero quadruple");
}

struct PostulationVerdict {
  long long length = 0;         // deg(Y)
  long long series = 0;         // N = binom(n+d, n)
  long long expected_rank = 0;  // min(length, N)
  long long rank = 0;
  bool special = false;  // rank < expected_rank
  long long dim = 0;     // N - 1 - rank
  long long vdim = 0;    // N - length - 1
  long long edim = 0;    // max(vdim, -1), the expected dimension

  bool operator==(const PostulationVerdict&) const = default;
};

inline PostulationVerdict classify(long long rank, const FatPointConfig& c) {
  PostulationVerdict v;
  v.length = c.length();
  v.series = series_size(c.n, c.d);
  v.expected_rank = std::min(v.length, v.series);
  if (rank > v.expected_rank) throw std::logic_error("classify: rank exceeds min(length, N)");
  v.rank = rank;
  v.special = rank != v.expected_rank;
  v.dim = v.series - 1 - rank;
  v.vdim = v.series - v.length - 1;
  v.edim = std::max(v.vdim, -1LL);
  return v;
}

}  // namespace fatpoints
