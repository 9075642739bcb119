/*
 * Monomial order checks: counts, the fixed descending grevlex order, and the
 * comparator axioms on small degree ranges.
 */

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fatpoints/monomials.hpp"
#include "fatpoints/scheme.hpp"

using fatpoints::grevlex_precedes;
using fatpoints::monomials;
using fatpoints::MultiIndex;

TEST_CASE("monomial counts match the binomial formula") {
  REQUIRE(monomials(3, 0).size() == 1);
  REQUIRE(monomials(3, 1).size() == 4);
  REQUIRE(monomials(3, 10).size() == 286);
  REQUIRE(monomials(2, 2).size() == 6);
  for (int d = 0; d <= 8; ++d)
    REQUIRE(monomials(3, d).size() == static_cast<std::size_t>(fatpoints::series_size(3, d)));
  REQUIRE_THROWS_AS(monomials(0, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(monomials(3, -1), std::invalid_argument);
}

TEST_CASE("degree-one order is x0, x1, x2, x3") {
  const auto lin = monomials(3, 1);
  REQUIRE(lin[0] == MultiIndex{1, 0, 0, 0});
  REQUIRE(lin[1] == MultiIndex{0, 1, 0, 0});
  REQUIRE(lin[2] == MultiIndex{0, 0, 1, 0});
  REQUIRE(lin[3] == MultiIndex{0, 0, 0, 1});
}

TEST_CASE("list runs from x0^d down to x3^d") {
  for (int d : {2, 5, 9}) {
    const auto mons = monomials(3, d);
    REQUIRE(mons.front() == MultiIndex{d, 0, 0, 0});
    REQUIRE(mons.back() == MultiIndex{0, 0, 0, d});
    // Strictly descending: each element precedes the next one.
    for (std::size_t i = 1; i < mons.size(); ++i) REQUIRE(grevlex_precedes(mons[i - 1], mons[i]));
    // No duplicates and every weight is d.
    std::set<MultiIndex> unique(mons.begin(), mons.end());
    REQUIRE(unique.size() == mons.size());
    for (const auto& m : mons) {
      int s = 0;
      for (int e : m) s += e;
      REQUIRE(s == d);
    }
  }
}

TEST_CASE("comparator is irreflexive and total on one degree") {
  const auto mons = monomials(3, 4);
  for (const auto& a : mons) REQUIRE_FALSE(grevlex_precedes(a, a));
  for (const auto& a : mons)
    for (const auto& b : mons)
      if (a != b) REQUIRE(grevlex_precedes(a, b) != grevlex_precedes(b, a));
}

TEST_CASE("grevlex compares by the last nonzero difference") {
  // x0*x2 vs x1^2: difference (1,-2,1,0), last nonzero positive.
  REQUIRE_FALSE(grevlex_precedes(MultiIndex{1, 0, 1, 0}, MultiIndex{0, 2, 0, 0}));
  REQUIRE(grevlex_precedes(MultiIndex{0, 2, 0, 0}, MultiIndex{1, 0, 1, 0}));
  // Anything with x3 comes after the same degree without it.
  REQUIRE(grevlex_precedes(MultiIndex{0, 2, 0, 0}, MultiIndex{1, 0, 0, 1}));
  REQUIRE_FALSE(grevlex_precedes(MultiIndex{1, 0, 0, 1}, MultiIndex{0, 2, 0, 0}));
}
