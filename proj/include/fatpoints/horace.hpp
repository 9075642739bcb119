#pragma once

/**
 * Exact integer verifiers for the degeneration arguments that take over
 * where matrix checks stop: layer tables for points split along a plane,
 * the fifteen admissible overflow decompositions, the descent inequality
 * between consecutive plane degrees, the small-5-point-share bound, and the
 * residual degree bounds at kernel degree 13.
 */

#include "fatpoints/scheme.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fatpoints {

// Length layers of an m-point split along a plane: first entry the trace,
// the rest the residual layers; entries sum to the point length.
inline std::vector<std::vector<long long>> layer_sequences(int m) {
  switch (m) {
    case 2:
      return {{1, 3}};
    case 3:
      return {{1, 6, 3}, {3, 6, 1}};
    case 4:
      return {{1, 10, 6, 3}, {3, 10, 6, 1}, {6, 10, 3, 1}};
    case 5:
      return {{1, 15, 10, 6, 3}, {3, 15, 10, 6, 1}, {6, 15, 10, 3, 1}, {10, 15, 6, 3, 1}};
    default:
      throw std::invalid_argument("layer_sequences: tabulated for 2 <= m <= 5");
  }
}

struct BetaParts {
  int e = 0, f = 0, g = 0, h = 0;

  int value() const { return 10 * e + 6 * f + 3 * g + h; }
  int sum() const { return e + f + g + h; }
  bool operator==(const BetaParts&) const = default;
};

// The fifteen admissible overflow decompositions beta = 10e + 6f + 3g + h,
// exactly one per beta in 0..14.
inline const std::array<BetaParts, 15>& beta_parts_table() {
  static const std::array<BetaParts, 15> table = {{
      {0, 0, 0, 0},
      {0, 0, 0, 1},
      {0, 0, 0, 2},
      {0, 0, 1, 0},
      {0, 0, 1, 1},
      {0, 0, 1, 2},
      {0, 1, 0, 0},
      {0, 1, 0, 1},
      {0, 1, 0, 2},
      {0, 1, 1, 0},
      {1, 0, 0, 0},
      {1, 0, 0, 1},
      {1, 0, 0, 2},
      {1, 0, 1, 0},
      {1, 0, 1, 1},
  }};
  return table;
}

inline BetaParts decompose_beta(int beta) {
  if (beta < 0 || beta > 14) throw std::invalid_argument("decompose_beta: need 0 <= beta <= 14");
  for (const auto& p : beta_parts_table())
    if (p.value() == beta) return p;
  throw std::logic_error("decompose_beta: table is not surjective");  // unreachable while the table is intact
}

// Which overflow decompositions a descent claim quantifies over.
enum class BetaSet {
  full,       // all fifteen
  small_sum,  // e+f+g+h <= 2
  zero,       // e=f=g=h = 0
};

inline std::vector<BetaParts> beta_set(BetaSet s) {
  std::vector<BetaParts> out;
  for (const auto& p : beta_parts_table()) {
    if (s == BetaSet::small_sum && p.sum() > 2) continue;
    if (s == BetaSet::zero && p.sum() != 0) continue;
    out.push_back(p);
  }
  return out;
}

// Smallest plane degree at which the descent holds for the given set.
inline long long descent_threshold(BetaSet s) {
  switch (s) {
    case BetaSet::full:
      return 18;
    case BetaSet::small_sum:
      return 15;
    case BetaSet::zero:
      return 4;
  }
  throw std::invalid_argument("descent_threshold: unknown set");
}

// One plane load: a,b,c,u,v count 5..1-layer contributions, beta the
// overflow decomposition.
struct DescentCase {
  long long a = 0, b = 0, c = 0, u = 0, v = 0;
  BetaParts beta;
};

// Premise: the degree-t plane section admits the load.
inline bool descent_premise(const DescentCase& k, long long t) {
  return 15 * k.a + 10 * k.b + 6 * k.c + 3 * k.u + k.v + k.beta.value() <= binom(t + 2, 2);
}

// Conclusion: the degree-(t-1) section admits the descended load.
inline bool descent_conclusion(const DescentCase& k, long long t) {
  return 10 * k.a + 6 * k.b + 3 * k.c + k.u + 15 * k.beta.sum() <= binom(t + 1, 2);
}

// Exhaustive search for a load meeting the premise but not the conclusion.
// v appears only on the premise's left side, so v = 0 dominates: any
// counterexample yields one with v = 0, and the search may fix it.
inline std::optional<DescentCase> find_descent_counterexample(long long t, BetaSet set) {
  const long long cap = binom(t + 2, 2);
  for (const auto& beta : beta_set(set)) {
    const long long rest = cap - beta.value();
    for (long long a = 0; 15 * a <= rest; ++a)
      for (long long b = 0; 15 * a + 10 * b <= rest; ++b)
        for (long long c = 0; 15 * a + 10 * b + 6 * c <= rest; ++c)
          for (long long u = 0; 15 * a + 10 * b + 6 * c + 3 * u <= rest; ++u) {
            const DescentCase k{a, b, c, u, 0, beta};
            if (!descent_conclusion(k, t)) return k;
          }
  }
  return std::nullopt;
}

inline bool check_layer_descent(long long t, BetaSet set) { return !find_descent_counterexample(t, set); }

// If the weight fits under N + 13 and w stays below alpha = (2x+y)/42, the
// 5-point share is small: 420 w <= N.
inline bool five_point_bound_holds(int d, long long w, long long x, long long y, long long z) {
  const long long N = series_size(3, d);
  if (35 * w + 20 * x + 10 * y + 4 * z > N + 13)
    throw std::invalid_argument("five_point_bound_holds: weight above the window");
  const long long alpha = (2 * x + y) / 42;
  if (w > alpha - 1) return true;  // hypothesis empty
  return 420 * w <= N;
}

// 240 times the inner expression of the residual degree bound at kernel
// degree 13; the degree itself is at most 3/2 of inner/240.
inline long long residual_inner_240(int d) {
  return 240 * binom(16, 3) + 240 * 13 + 36 + 480 * (d - 13) - 11 * binom(d + 3, 3);
}

// Residual degree fits under binom(16,3); holds from d = 30 on.
inline bool residual_degree_fits_16(int d) { return 3 * residual_inner_240(d) <= 480 * binom(16, 3); }

// Residual degree fits under binom(12,3); holds from d = 38 on.
inline bool residual_degree_fits_12(int d) { return 3 * residual_inner_240(d) <= 480 * binom(12, 3); }

struct AuditReport {
  bool layers_ok = false;       // layer sums match point lengths
  bool beta_ok = false;         // decomposition table bijective onto 0..14
  bool descent_ok = false;      // no counterexample at or above each threshold
  bool descent_sharp = false;   // counterexamples right below the full and small-sum thresholds
  bool five_point_ok = false;   // share bound on a deterministic grid
  bool residual_ok = false;     // degree bounds hold on their ranges and fail just below

  bool all() const { return layers_ok && beta_ok && descent_ok && descent_sharp && five_point_ok && residual_ok; }
};

inline AuditReport run_audit() {
  AuditReport r;

  r.layers_ok = true;
  for (int m = 2; m <= 5; ++m)
    for (const auto& seq : layer_sequences(m)) {
      long long sum = 0;
      for (long long v : seq) sum += v;
      if (sum != point_length(3, m) || static_cast<int>(seq.size()) != m) r.layers_ok = false;
    }

  r.beta_ok = true;
  for (int beta = 0; beta <= 14; ++beta) {
    int hits = 0;
    for (const auto& p : beta_parts_table())
      if (p.value() == beta) ++hits;
    if (hits != 1) r.beta_ok = false;
  }

  r.descent_ok = true;
  for (const BetaSet set : {BetaSet::full, BetaSet::small_sum, BetaSet::zero}) {
    const long long t0 = descent_threshold(set);
    for (long long t = t0; t <= t0 + 6; ++t)
      if (!check_layer_descent(t, set)) r.descent_ok = false;
  }

  r.descent_sharp =
      !check_layer_descent(descent_threshold(BetaSet::full) - 1, BetaSet::full) &&
      !check_layer_descent(descent_threshold(BetaSet::small_sum) - 1, BetaSet::small_sum);

  r.five_point_ok = true;
  for (int d : {11, 20, 38, 52, 60}) {
    const long long N = series_size(3, d);
    for (long long w = 0; w <= 12; ++w)
      for (long long x = 0; x <= 60; x += 3)
        for (long long y = 0; y <= 60; y += 3)
          for (long long z = 0; z <= 4; ++z) {
            if (35 * w + 20 * x + 10 * y + 4 * z > N + 13) continue;
            if (!five_point_bound_holds(d, w, x, y, z)) r.five_point_ok = false;
          }
  }

  r.residual_ok = true;
  for (int d = 30; d <= 150; ++d)
    if (!residual_degree_fits_16(d)) r.residual_ok = false;
  for (int d = 38; d <= 150; ++d)
    if (!residual_degree_fits_12(d)) r.residual_ok = false;
  if (residual_degree_fits_16(29) || residual_degree_fits_12(37)) r.residual_ok = false;

  return r;
}

}  // namespace fatpoints
