/**
 * Reduction walkthrough: take a degree-40 window case heavy on small
 * multiplicities and trade blocks for 13-points until it lands in the
 * bounded case list. Every applied rule is rank-verified on first use.
 */

#include "fatpoints/fatpoints.hpp"

#include <iostream>

int main() {
  using namespace fatpoints;

  // Weight 35*300 + 20*50 + 10*80 + 4*10 = 12340 = binom(43,3) - 1: inside
  // the degree-40 window.
  const SweepCase start{40, 0, 0, 300, 50, 80, 10};
  std::cout << "start: " << start.config().to_string() << "\n";

  RuleRegistry rules;
  const ReductionTrace trace = reduce(start, rules);
  for (const auto& step : trace.steps) std::cout << "  " << step.rule_id << "\n";
  std::cout << "final: " << trace.final_case.config().to_string() << "\n";
  std::cout << trace.steps.size() << " steps, weight " << start.weight() << " -> " << trace.final_case.weight()
            << "\n";
  return 0;
}
