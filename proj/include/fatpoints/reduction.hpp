#pragma once

/**
 * Length-preserving reductions: trading a block of small fat points for one
 * bigger point.
 *
 * A rule's consumed block, placed in its kernel degree k, has virtual
 * dimension -1 and full rank: it exactly exhausts the degree-k forms. Such
 * a block may be replaced inside any union by a single (k+1)-point without
 * changing speciality in any degree, so checking the reduced union
 * suffices. Every rule is verified computationally before first use; a
 * full-rank witness mod p lifts to the rationals, making that verification
 * sound.
 */

#include "fatpoints/checker.hpp"
#include "fatpoints/scheme.hpp"
#include "fatpoints/sweeps.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fatpoints {

struct ReductionRule {
  int kernel_degree = 0;                            // degree where the block exhausts all forms
  std::vector<std::pair<int, long long>> consumed;  // (multiplicity, count) removed
  int produced = 0;                                 // multiplicity of the single point added

  FatPointConfig kernel_config() const { return FatPointConfig(3, kernel_degree, consumed); }

  std::string id() const {
    std::ostringstream os;
    os << 'k' << kernel_degree << ':';
    bool first = true;
    for (auto& [m, c] : kernel_config().spec) {
      os << (first ? "" : ",") << m << '^' << c;
      first = false;
    }
    return os.str();
  }
};

// Five 2-points exhaust the cubics; they trade for one 4-point.
inline ReductionRule rule_five_doubles() { return {3, {{2, 5}}, 4}; }

// 4^a 3^(22-2a) exhausts the degree-9 forms; trades for one 10-point.
inline ReductionRule rule_quartic_block(long long a) {
  if (a < 0 || a > 11) throw std::invalid_argument("rule_quartic_block: need 0 <= a <= 11");
  return {9, {{4, a}, {3, 22 - 2 * a}}, 10};
}

// 5^4 4^4 exhausts the degree-9 forms; trades for one 10-point.
inline ReductionRule rule_mixed_block() { return {9, {{5, 4}, {4, 4}}, 10}; }

// 5^a 4^b 3^c with 7a+4b+2c = 91 exhausts the degree-12 forms; trades for
// one 13-point. Parity forces a odd.
inline ReductionRule rule_quintuple_block(long long a, long long b, long long c) {
  if (a < 0 || b < 0 || c < 0 || 7 * a + 4 * b + 2 * c != 91)
    throw std::invalid_argument("rule_quintuple_block: need 7a+4b+2c = 91");
  return {12, {{5, a}, {4, b}, {3, c}}, 13};
}

// All 93 rules: the cubic rule, 12 quartic blocks, the mixed block, and the
// 79 solutions of 7a+4b+2c = 91.
inline std::vector<ReductionRule> builtin_rules() {
  std::vector<ReductionRule> out;
  out.push_back(rule_five_doubles());
  for (long long a = 0; a <= 11; ++a) out.push_back(rule_quartic_block(a));
  out.push_back(rule_mixed_block());
  for (long long a = 1; a <= 13; a += 2)
    for (long long b = 0; 7 * a + 4 * b <= 91; ++b) {
      const long long rem = 91 - 7 * a - 4 * b;
      if (rem % 2) continue;
      out.push_back(rule_quintuple_block(a, b, rem / 2));
    }
  return out;
}

// Sound iff the consumed block has virtual dimension -1 in the kernel
// degree, matches the produced point's length, and postulates well there.
inline bool verify_rule(const ReductionRule& rule, const CheckPolicy& policy = {}) {
  const FatPointConfig kc = rule.kernel_config();
  if (virtual_dimension(kc) != -1) return false;
  if (point_length(kc.n, rule.produced) != kc.length()) return false;
  return !check_exact(kc, policy).verdict.special;
}

// Verifies each rule once on first use and refuses unverified trades.
class RuleRegistry {
 public:
  explicit RuleRegistry(CheckPolicy policy = {}) : policy_(std::move(policy)) {}

  const CheckPolicy& policy() const { return policy_; }

  void ensure(const ReductionRule& rule) {
    auto [it, inserted] = verified_.try_emplace(rule.id(), false);
    if (inserted) it->second = verify_rule(rule, policy_);
    if (!it->second) throw std::logic_error("reduction rule failed verification: " + rule.id());
  }

 private:
  CheckPolicy policy_;
  std::map<std::string, bool> verified_;
};

namespace detail {

inline std::string case_text(const SweepCase& c) {
  std::ostringstream os;
  os << c.thirteens << ',' << c.tens << ',' << c.w << ',' << c.x << ',' << c.y << ',' << c.z;
  return os.str();
}

}  // namespace detail

struct ReductionStep {
  std::string rule_id;
  SweepCase after;
};

struct ReductionTrace {
  SweepCase start;
  SweepCase final_case;
  std::vector<ReductionStep> steps;
  bool few_quintuples = false;  // exited because the 5-point share is provably small

  // Single-token-free summary, safe to embed quoted in a certificate.
  std::string to_string() const {
    std::ostringstream os;
    os << "d=" << start.d << " start=" << detail::case_text(start) << " steps=";
    for (std::size_t i = 0; i < steps.size(); ++i) os << (i ? ";" : "") << steps[i].rule_id;
    os << " final=" << detail::case_text(final_case) << " few5=" << (few_quintuples ? 1 : 0);
    return os.str();
  }
};

// Box of the degree range's case list; the reduced case must land here.
inline bool reduction_target_ok(const SweepCase& c) {
  if (c.z > 4 || c.w < 0 || c.x < 0 || c.y < 0) return false;
  if (c.d >= 11 && c.d <= 21) return c.thirteens == 0 && c.tens == 0 && c.in_window();
  if (c.d >= 22 && c.d <= 37)
    return c.thirteens == 0 && 2 * c.x + c.y <= 21 && (c.w <= 3 || c.x <= 3) && c.in_window();
  if (c.d >= 38) return c.tens == 0 && 2 * c.x + c.y <= 41 && c.w <= 12 && c.in_window();
  return false;
}

// Reduces a window case onto its degree range's case list. Phases: clear
// 2-points five at a time; for 22 <= d <= 37 drain 2x+y below 22 and then
// the 5/4 surplus into 10-points; for d >= 38 drain 2x+y below 42 one
// 5-point at a time and then 5-points thirteen at a time into 13-points,
// unless too few 5-points exist for the drain (the arithmetic bound covers
// those). Weight is invariant and the margin only widens, so window
// membership is preserved.
inline ReductionTrace reduce(const SweepCase& start, RuleRegistry& rules) {
  if (start.d < 11) throw std::invalid_argument("reduce: defined for d >= 11");
  if (start.thirteens || start.tens) throw std::invalid_argument("reduce: start case must be a plain quadruple");
  if (!start.in_window()) throw std::invalid_argument("reduce: start case outside its window");
  ReductionTrace tr;
  tr.start = start;
  SweepCase c = start;
  const long long start_weight = c.weight();

  auto apply = [&](const ReductionRule& rule, SweepCase next) {
    rules.ensure(rule);
    if (next.weight() != start_weight) throw std::logic_error("reduce: weight drifted");
    c = next;
    tr.steps.push_back({rule.id(), c});
  };

  while (c.z >= 5) apply(rule_five_doubles(), {c.d, c.thirteens, c.tens, c.w, c.x + 1, c.y, c.z - 5});

  if (c.d >= 22 && c.d <= 37) {
    while (2 * c.x + c.y >= 22) {
      const long long a = std::min<long long>(c.x, 11), b = 22 - 2 * a;  // b <= y since 2x+y >= 22
      apply(rule_quartic_block(a), {c.d, c.thirteens, c.tens + 1, c.w, c.x - a, c.y - b, c.z});
    }
    while (c.w >= 4 && c.x >= 4)
      apply(rule_mixed_block(), {c.d, c.thirteens, c.tens + 1, c.w - 4, c.x - 4, c.y, c.z});
  } else if (c.d >= 38) {
    const long long alpha = (2 * c.x + c.y) / 42;
    if (c.w <= alpha - 1) {
      tr.few_quintuples = true;
    } else {
      for (long long i = 0; i < alpha; ++i) {
        const long long a = std::min<long long>(c.x, 21), b = 42 - 2 * a;  // b <= y while 2x+y >= 42
        apply(rule_quintuple_block(1, a, b), {c.d, c.thirteens + 1, c.tens, c.w - 1, c.x - a, c.y - b, c.z});
      }
      while (c.w >= 13)
        apply(rule_quintuple_block(13, 0, 0), {c.d, c.thirteens + 1, c.tens, c.w - 13, c.x, c.y, c.z});
    }
  }

  tr.final_case = c;
  if (!tr.few_quintuples && !reduction_target_ok(c)) throw std::logic_error("reduce: final case missed the target box");
  return tr;
}

}  // namespace fatpoints
