/**
 * Minimal library use: check whether nine 5-points impose independent
 * conditions on degree-10 forms. They do not; this is the classic
 * exceptional case, and the exact oracle confirms the defect.
 */

#include "fatpoints/fatpoints.hpp"

#include <iostream>

int main() {
  using namespace fatpoints;

  const auto config = FatPointConfig::parse("d=10 n=3 5^9");
  const CaseOutcome out = check_exact(config);

  std::cout << config.to_string() << ": rank " << out.verdict.rank << " of expected " << out.verdict.expected_rank
            << (out.verdict.special ? " (special)" : " (good postulation)") << "\n";
  if (out.oracle_run) std::cout << "exact rank over the rationals: " << out.oracle_rank << "\n";
  std::cout << "linear system dimension " << out.verdict.dim << ", expected " << out.verdict.edim << "\n";
  return 0;
}
