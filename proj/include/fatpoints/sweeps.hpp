#pragma once

/**
 * Case enumerators and scan drivers.
 *
 * Each degree range has a finite window of critical lengths around
 * N = binom(d+3, 3); good postulation there propagates to all lengths by
 * adding or removing 2-points. Degrees 22+ complete each small-multiplicity
 * quadruple with the unique count of 10-points (resp. 13-points) whose
 * weight lands in the window; the window is narrower than one big block, so
 * at most one count fits. The degree 9 and 10 scans cover the published
 * exception regions instead and collect the special cases.
 */

#include "fatpoints/checker.hpp"
#include "fatpoints/scheme.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace fatpoints {

struct SweepCase {
  int d = 0;
  long long thirteens = 0;
  long long tens = 0;
  long long w = 0;  // 5-points
  long long x = 0;  // 4-points
  long long y = 0;  // 3-points
  long long z = 0;  // 2-points

  FatPointConfig config() const { return quadruple_config(d, w, x, y, z, tens, thirteens); }
  long long weight() const { return 455 * thirteens + 220 * tens + 35 * w + 20 * x + 10 * y + 4 * z; }
  // Tight margin keyed on the smallest multiplicity present; a pure
  // big-block case keeps the widest one.
  long long margin() const { return (w || x || y || z) ? delta_bound(w, x, y, z) : 13; }
  bool in_window() const {
    const long long N = series_size(3, d);
    return N - 3 <= weight() && weight() <= N + margin();
  }

  bool operator==(const SweepCase&) const = default;
};

// Degrees 11..21: quadruples with w >= 1 (w = 0 is the known quartuple
// case) whose length lies in the published window. This range was
// enumerated with the simplified margin: 13, tightened to 1 once z > 0.
inline std::vector<SweepCase> enumerate_11_21(int d) {
  if (d < 11 || d > 21) throw std::invalid_argument("enumerate_11_21: need 11 <= d <= 21");
  const long long N = series_size(3, d);
  const long long y1 = (N + 9) / 10, x1 = (N + 19) / 20, w1 = (N + 34) / 35;
  std::vector<SweepCase> out;
  for (long long z = 0; z <= 4; ++z) {
    const long long margin = z > 0 ? 1 : 13;
    for (long long y = 0; y <= y1; ++y)
      for (long long x = 0; x <= x1; ++x)
        for (long long w = 1; w <= w1; ++w) {
          const long long L = 35 * w + 20 * x + 10 * y + 4 * z;
          if (N - 3 <= L && L <= N + margin) out.push_back({d, 0, 0, w, x, y, z});
        }
  }
  return out;
}

namespace detail {

// Unique big-block count hitting [N-3, N+margin] above quadruple weight s,
// or -1. Uniqueness holds because margin + 4 < block.
inline long long block_count_in_window(long long N, long long margin, long long s, long long block) {
  const long long lo = N - 3 - s, hi = N + margin - s;
  if (hi < 0) return -1;
  const long long q = lo <= 0 ? 0 : (lo + block - 1) / block;
  return block * q <= hi ? q : -1;
}

}  // namespace detail

// Degrees 22..37 (21 accepted: the published sanity run). Quadruples in the
// reduced box, each completed by 10-point blocks; tight margins throughout.
inline std::vector<SweepCase> enumerate_22_37(int d) {
  if (d < 21 || d > 37) throw std::invalid_argument("enumerate_22_37: need 21 <= d <= 37");
  const long long N = series_size(3, d);
  const long long w1 = (N + 13) / 35;
  std::vector<SweepCase> out;
  for (long long z = 0; z <= 4; ++z)
    for (long long y = 0; y <= 21; ++y)
      for (long long x = 0; 2 * x + y <= 21; ++x)
        for (long long w = 0; w <= w1; ++w) {
          if (w > 3 && x > 3) continue;
          SweepCase c{d, 0, 0, w, x, y, z};
          const long long q = detail::block_count_in_window(N, c.margin(), c.weight(), 220);
          if (q < 0) continue;
          c.tens = q;
          out.push_back(c);
        }
  return out;
}

// Degrees 38..52, completed by 13-point blocks. The box no longer grows
// with d, so the case count stays bounded (max 405 over all d <= 100).
// Accepts d > 52 for that count corroboration.
inline std::vector<SweepCase> enumerate_38_52(int d) {
  if (d < 38) throw std::invalid_argument("enumerate_38_52: need d >= 38");
  const long long N = series_size(3, d);
  std::vector<SweepCase> out;
  for (long long z = 0; z <= 4; ++z)
    for (long long y = 0; y <= 41; ++y)
      for (long long x = 0; 2 * x + y <= 41; ++x)
        for (long long w = 0; w <= 12; ++w) {
          SweepCase c{d, 0, 0, w, x, y, z};
          const long long r = detail::block_count_in_window(N, c.margin(), c.weight(), 455);
          if (r < 0) continue;
          c.thirteens = r;
          out.push_back(c);
        }
  return out;
}

// Scan regions behind the published degree 9 and 10 exception tables.
// Emission is lexicographically descending on (w, x, y, z).
inline std::vector<SweepCase> enumerate_exceptions_region(int d) {
  long long lo, hi, wfree_lo, wfree_hi;
  if (d == 10) {
    lo = 283, hi = 320, wfree_lo = 7, wfree_hi = 8;  // around N = 286
  } else if (d == 9) {
    lo = 217, hi = 254, wfree_lo = 1, wfree_hi = 6;  // around N = 220
  } else {
    throw std::invalid_argument("exception scan is defined for d = 9 and d = 10 only");
  }
  std::vector<SweepCase> out;
  for (long long w = hi / 35; w >= 1; --w)
    for (long long x = (hi - 35 * w) / 20; x >= 0; --x)
      for (long long y = (hi - 35 * w - 20 * x) / 10; y >= 0; --y) {
        const long long s = 35 * w + 20 * x + 10 * y;
        const long long zhi = (hi - s) / 4;
        const bool wfree = wfree_lo <= w && w <= wfree_hi;  // below-window lengths included
        const long long zlo = wfree ? 0 : std::max(0LL, (lo - s + 3) / 4);
        for (long long z = zhi; z >= zlo; --z) out.push_back({d, 0, 0, w, x, y, z});
      }
  return out;
}

// One published table line: quadruple, min(deg, N), expected dimension,
// rank, actual dimension.
struct ExceptionRow {
  long long w = 0, x = 0, y = 0, z = 0;
  long long mindeg = 0;
  long long e = 0;
  long long r = 0;
  long long dim = 0;

  bool operator==(const ExceptionRow&) const = default;

  std::string csv() const {
    std::ostringstream os;
    os << w << ',' << x << ',' << y << ',' << z << ',' << mindeg << ',' << e << ',' << r << ',' << dim;
    return os.str();
  }
};

inline ExceptionRow exception_row(const CaseOutcome& o) {
  const auto& c = o.config;
  const auto& v = o.verdict;
  return {c.count_of(5), c.count_of(4), c.count_of(3), c.count_of(2), v.expected_rank, v.edim, v.rank, v.dim};
}

// Table order: lexicographically descending quadruples.
inline void sort_exception_rows(std::vector<ExceptionRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ExceptionRow& a, const ExceptionRow& b) {
    return std::tie(a.w, a.x, a.y, a.z) > std::tie(b.w, b.x, b.y, b.z);
  });
}

inline std::string exceptions_csv(const std::vector<ExceptionRow>& rows) {
  std::string out = "w,x,y,z,min,e,r,d\n";
  for (const auto& r : rows) out += r.csv() + "\n";
  return out;
}

// The complete exception lists for degrees 9 and 10; every other quadruple
// in those degrees postulates well. Scans are expected to reproduce these
// exactly.
inline std::vector<ExceptionRow> known_exceptions(int d) {
  if (d == 10)
    return {
        {9, 0, 0, 0, 286, -1, 285, 0}, {8, 1, 0, 0, 286, -1, 284, 1}, {8, 0, 1, 1, 286, -1, 285, 0},
        {8, 0, 1, 0, 286, -1, 283, 2}, {8, 0, 0, 2, 286, -1, 284, 1}, {8, 0, 0, 1, 284, 1, 282, 3},
        {7, 2, 0, 1, 286, -1, 284, 1}, {7, 2, 0, 0, 285, 0, 280, 5},  {7, 1, 2, 0, 285, 0, 284, 1},
    };
  if (d == 9)
    return {
        {6, 0, 1, 1, 220, -1, 219, 0}, {6, 0, 1, 0, 220, -1, 216, 3}, {6, 0, 0, 3, 220, -1, 218, 1},
        {6, 0, 0, 2, 218, 1, 214, 5},  {6, 0, 0, 1, 214, 5, 210, 9},  {6, 0, 0, 0, 210, 9, 206, 13},
        {5, 2, 0, 1, 219, 0, 217, 2},  {5, 2, 0, 0, 215, 4, 213, 6},  {5, 1, 2, 1, 219, 0, 218, 1},
        {5, 1, 2, 0, 215, 4, 214, 5},  {5, 1, 1, 3, 217, 2, 216, 3},  {5, 1, 1, 2, 213, 6, 212, 7},
        {5, 1, 1, 1, 209, 10, 208, 11}, {5, 1, 1, 0, 205, 14, 204, 15}, {5, 1, 0, 6, 219, 0, 218, 1},
        {5, 1, 0, 5, 215, 4, 214, 5},  {5, 1, 0, 4, 211, 8, 210, 9},  {5, 1, 0, 3, 207, 12, 206, 13},
        {5, 1, 0, 2, 203, 16, 202, 17}, {5, 1, 0, 1, 199, 20, 198, 21}, {5, 1, 0, 0, 195, 24, 194, 25},
        {4, 3, 2, 0, 220, -1, 218, 1}, {3, 6, 0, 0, 220, -1, 218, 1}, {3, 5, 1, 1, 219, 0, 218, 1},
        {3, 5, 1, 0, 215, 4, 214, 5},
    };
  throw std::invalid_argument("known_exceptions: tables exist for d = 9 and d = 10 only");
}

// Runs every case and hands outcomes to the sink in case order. Outcomes
// are identical for any job count: each case seeds from its own config
// text, never from scheduling.
template <typename Sink>
inline void run_cases(const std::vector<SweepCase>& cases, const CheckPolicy& policy, int jobs, Sink&& sink) {
  if (jobs <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) sink(i, cases[i], check_exact(cases[i].config(), policy));
    return;
  }
  const std::size_t chunk = static_cast<std::size_t>(jobs) * 8;
  std::vector<CaseOutcome> block(chunk);
  for (std::size_t base = 0; base < cases.size(); base += chunk) {
    const std::size_t n = std::min(chunk, cases.size() - base);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t k = next.fetch_add(1); k < n; k = next.fetch_add(1))
          block[k] = check_exact(cases[base + k].config(), policy);
      });
    for (auto& th : pool) th.join();
    for (std::size_t k = 0; k < n; ++k) sink(base + k, cases[base + k], std::move(block[k]));
  }
}

// Full exception scan: runs the region and returns the special rows in
// table order.
inline std::vector<ExceptionRow> scan_exceptions(int d, const CheckPolicy& policy, int jobs = 1) {
  std::vector<ExceptionRow> rows;
  run_cases(enumerate_exceptions_region(d), policy, jobs, [&](std::size_t, const SweepCase&, const CaseOutcome& o) {
    if (o.verdict.special) rows.push_back(exception_row(o));
  });
  sort_exception_rows(rows);
  return rows;
}

}  // namespace fatpoints
