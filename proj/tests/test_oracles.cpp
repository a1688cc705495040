#include "doctest.h"

#include "sumkit/oracles.hpp"

#include <algorithm>

using namespace sumkit;
using namespace sumkit::oracles;

TEST_CASE("divisor sums") {
  CHECK(divisor_sum(1) == 1);
  CHECK(divisor_sum(6) == 12);
  CHECK(divisor_sum(12) == 28);
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 97L, 101L}) CHECK(divisor_sum(p) == p + 1);
  // Multiplicative on coprime arguments.
  CHECK(divisor_sum(35) == divisor_sum(5) * divisor_sum(7));
  CHECK_THROWS(divisor_sum(0));
}

TEST_CASE("permutations") {
  const Permutation t = Permutation::transposition(4, 0, 1);
  const Permutation u = Permutation::transposition(4, 1, 2);
  CHECK(t * t == Permutation(4));
  CHECK((t * u).cycle_type() == std::vector<int>{3, 1});
  Permutation p(4);
  p.apply_transposition(1, 2);
  p.apply_transposition(0, 1);
  CHECK(p == t * u);
  CHECK(Permutation(3).cycle_type() == std::vector<int>{1, 1, 1});
}

TEST_CASE("hurwitz enumeration") {
  CHECK(hurwitz_oracle(1, 0, {1}) == 1);
  CHECK(hurwitz_oracle(2, 0, {2}) == make_rational(1, 2));
  CHECK(hurwitz_oracle(2, 0, {1, 1}) == make_rational(1, 2));
  CHECK(hurwitz_oracle(3, 0, {3}) == 1);
  CHECK(hurwitz_oracle(3, 0, {1, 1, 1}) == 4);
  CHECK_THROWS(hurwitz_oracle(7, 0, {7}));
}

TEST_CASE("hurwitz enumeration ignores the order of the profile") {
  std::vector<int> alpha = {1, 2, 2};
  const Rational base = hurwitz_oracle(5, 0, alpha);
  do {
    CHECK(hurwitz_oracle(5, 0, alpha) == base);
  } while (std::next_permutation(alpha.begin(), alpha.end()));
}

TEST_CASE("rational plane curve counts") {
  const std::vector<long> known = {1, 1, 12, 620, 87304};
  for (int d = 1; d <= 5; ++d) CHECK(kontsevich_oracle(d) == known[static_cast<std::size_t>(d - 1)]);
}
