/*
 * Single-case checker behavior: short-circuit on full rank, retry count on
 * special verdicts, oracle escalation modes, and seed derivation from the
 * canonical config text.
 */

#include <catch2/catch_amalgamated.hpp>

#include "fatpoints/checker.hpp"
#include "fatpoints/rng.hpp"
#include "fatpoints/scheme.hpp"

using fatpoints::case_seed_for;
using fatpoints::CheckPolicy;
using fatpoints::check_exact;
using fatpoints::FatPointConfig;
using fatpoints::OracleMode;
using fatpoints::quadruple_config;

TEST_CASE("five double points exhaust the cubics") {
  const auto out = check_exact(quadruple_config(3, 0, 0, 0, 5));
  REQUIRE(out.verdict.rank == 20);
  REQUIRE(out.verdict.expected_rank == 20);
  REQUIRE_FALSE(out.verdict.special);
  REQUIRE(out.verdict.vdim == -1);
  REQUIRE(out.verdict.dim == -1);
  REQUIRE(out.attempt_ranks.size() == 1);  // full rank short-circuits
  REQUIRE_FALSE(out.oracle_run);
  REQUIRE(out.oracle_rank == -1);
  REQUIRE(out.events.empty());
}

TEST_CASE("nine quintuple points in degree ten are special") {
  CheckPolicy policy;
  policy.retries = 2;
  const auto out = check_exact(quadruple_config(10, 9, 0, 0, 0), policy);
  REQUIRE(out.verdict.special);
  REQUIRE(out.verdict.rank == 285);
  REQUIRE(out.verdict.expected_rank == 286);
  REQUIRE(out.verdict.dim == 0);
  REQUIRE(out.attempt_ranks.size() == 3);  // 1 + retries, no attempt reached full rank
  for (const auto r : out.attempt_ranks) REQUIRE(r == 285);
  // Automatic oracle runs at d = 10 and confirms the defect over Q.
  REQUIRE(out.oracle_run);
  REQUIRE(out.oracle_rank == 285);
  REQUIRE(out.events.empty());
}

TEST_CASE("oracle off leaves the mod-p verdict") {
  CheckPolicy policy;
  policy.oracle = OracleMode::off;
  policy.retries = 1;
  const auto out = check_exact(quadruple_config(10, 9, 0, 0, 0), policy);
  REQUIRE(out.verdict.special);
  REQUIRE_FALSE(out.oracle_run);
  REQUIRE(out.oracle_rank == -1);
}

TEST_CASE("forced oracle runs even on good cases") {
  CheckPolicy policy;
  policy.oracle = OracleMode::forced;
  const auto out = check_exact(quadruple_config(3, 0, 0, 0, 5), policy);
  REQUIRE_FALSE(out.verdict.special);
  REQUIRE(out.oracle_run);
  REQUIRE(out.oracle_rank == 20);
  REQUIRE(out.events.empty());
}

TEST_CASE("automatic oracle respects the degree cutoff") {
  CheckPolicy policy;
  policy.retries = 0;
  policy.oracle_max_degree = 9;
  const auto out = check_exact(quadruple_config(10, 9, 0, 0, 0), policy);
  REQUIRE(out.verdict.special);
  REQUIRE_FALSE(out.oracle_run);
}

TEST_CASE("case seed depends only on the canonical config text") {
  const FatPointConfig a = quadruple_config(10, 9, 0, 0, 0);
  const FatPointConfig b = FatPointConfig::parse("n=3 5^4 d=10 5^5");
  REQUIRE(a == b);
  REQUIRE(case_seed_for(a, 1) == case_seed_for(b, 1));
  REQUIRE(case_seed_for(a, 1) != case_seed_for(a, 2));
  const FatPointConfig c = quadruple_config(11, 9, 0, 0, 0);
  REQUIRE(case_seed_for(a, 1) != case_seed_for(c, 1));
}

TEST_CASE("outcomes are deterministic and internally consistent") {
  const auto c = quadruple_config(6, 1, 1, 1, 1);
  const auto a = check_exact(c);
  const auto b = check_exact(c);
  REQUIRE(a.verdict == b.verdict);
  REQUIRE(a.attempt_seeds == b.attempt_seeds);
  REQUIRE(a.attempt_ranks == b.attempt_ranks);
  REQUIRE(a.case_seed == case_seed_for(c, fatpoints::kDefaultBaseSeed));
  REQUIRE(a.verdict == fatpoints::classify(a.verdict.rank, c));
  for (std::size_t i = 0; i < a.attempt_seeds.size(); ++i)
    REQUIRE(a.attempt_seeds[i] == fatpoints::derive_seed(a.case_seed, i));
}
