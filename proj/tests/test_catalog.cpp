#include "doctest.h"

#include "sumkit/catalog.hpp"
#include "sumkit/oracles.hpp"

using namespace sumkit;
using namespace sumkit::catalog;

namespace {

ContactSeq simple(int multiplicity, int copies = 1, int index = kFundamentalClass) {
  return ContactSeq(static_cast<std::size_t>(copies), Contact{multiplicity, index});
}

}  // namespace

TEST_CASE("line relative to two points") {
  CHECK(p1_rel(3, 0, simple(3), simple(3)) == make_rational(1, 3));
  CHECK(p1_rel(2, 1, simple(2), simple(2)) == 0);
  CHECK(p1_rel(2, 0, simple(1, 2), simple(2)) == 0);
  CHECK_THROWS_AS(p1_rel(3, 0, simple(2), simple(3)), std::invalid_argument);
}

TEST_CASE("line with a fixed branch point") {
  CHECK(p1_rel_branch(2, 0, simple(2), simple(1, 2)) == 1);
  CHECK(p1_rel_branch(2, 0, simple(2), simple(2)) == 0);
  CHECK(p1_rel_branch(3, 1, simple(3), simple(1, 3)) == 0);
  CHECK_THROWS_AS(p1_rel_branch(2, 0, simple(2), simple(1)), std::invalid_argument);
}

TEST_CASE("torus series is the divisor-sum series") {
  const Series g = torus_rel_series(30);
  CHECK(coefficient(g, Monomial({1})) == 1);
  CHECK(coefficient(g, Monomial({4})) == 7);
  // sum_d d t^d / (1 - t^d), expanded by hand.
  Series lambert(g.context(), 30);
  for (int d = 1; d <= 30; ++d) {
    for (int n = d; n <= 30; n += d) lambert.accumulate(Monomial({n}), Rational(d));
  }
  CHECK(g == lambert);
  for (int n = 1; n <= 30; ++n) CHECK(coefficient(g, Monomial({n})) == Rational(oracles::divisor_sum(n)));
}

TEST_CASE("torus times sphere families") {
  CHECK(coefficient(t2s2_series(T2S2Family::DfAbsolute, 5), Monomial({2})) == 6);
  CHECK(coefficient(t2s2_series(T2S2Family::DfRelF, 5), Monomial({2})) == 3);
  CHECK(coefficient(t2s2_series(T2S2Family::SdfRelF, 5), Monomial({3})) == 12);
  CHECK(coefficient(t2s2_series(T2S2Family::SdfAbsolute, 5), Monomial({3})) == 24);
  CHECK_FALSE(t2s2_two_fiber_supported(T2S2Family::DfAbsolute));
  CHECK_FALSE(t2s2_two_fiber_supported(T2S2Family::DfRelF));
  CHECK(t2s2_two_fiber_supported(T2S2Family::SdfRelF));
  for (auto f : {T2S2Family::DfAbsolute, T2S2Family::DfRelF, T2S2Family::SdfAbsolute, T2S2Family::SdfRelF}) {
    CHECK(parse_t2s2_family(to_string(f)) == f);
  }
  CHECK_THROWS(parse_t2s2_family("s+2df"));
}

TEST_CASE("ruled surface invariants") {
  const RuledValue cover = ruled_rel(1, 0, 3, 0, simple(3), simple(3), RuledConstraint::None);
  CHECK(cover.value == make_rational(1, 3));
  CHECK(cover.divisor_tensor);
  CHECK(ruled_rel(1, 0, 2, 0, simple(2), simple(2), RuledConstraint::Point).value == 1);
  const RuledValue section = ruled_rel(1, 1, 0, 0, {}, simple(1, 1, kPointClass), RuledConstraint::Point);
  CHECK(section.value == 1);
  CHECK_FALSE(section.divisor_tensor);
  CHECK(ruled_rel(1, 0, 3, 1, simple(3), simple(3), RuledConstraint::None).value == 0);
  CHECK_THROWS_AS(ruled_rel(1, 0, 3, 0, simple(2), simple(3), RuledConstraint::None), std::invalid_argument);

  // The tensor pairs a point contact with a fundamental one.
  CHECK(ruled_rel_indexed(1, 0, 3, 0, simple(3, 1, kPointClass), simple(3, 1, kFundamentalClass),
                          RuledConstraint::None) == make_rational(1, 3));
  CHECK(ruled_rel_indexed(1, 0, 3, 0, simple(3, 1, kPointClass), simple(3, 1, kPointClass),
                          RuledConstraint::None) == 0);
}

TEST_CASE("vanishing filter") {
  CHECK(vanishing_filter(0, 0, 0));
  CHECK_FALSE(vanishing_filter(1, 1, 0));
  CHECK(vanishing_filter(1, 0, 1));
  CHECK_FALSE(vanishing_filter(2, 0, 1));
}

TEST_CASE("catalog values respect the dimension count") {
  const auto rep = dimension_consistency(2, 2, 4, 2);
  CHECK(rep.failures.empty());
  CHECK(rep.nonzero > 0);
  CHECK(rep.checked > rep.nonzero);
}

TEST_CASE("catalog series") {
  const RelSeries p = p1_series(5);
  CHECK(p.size() == 5);
  const RelSeries pb = p1_series(3, true);
  CHECK(pb.size() > p1_series(3).size());
  const RelSeries r = ruled_series(1, 3, true);
  for (const auto& [key, c] : r.terms()) CHECK(c != 0);
}

TEST_CASE("catalog names") {
  CHECK(parse_entry("p1").name == "p1");
  const auto ruled = parse_entry("ruled:2");
  CHECK(ruled.name == "ruled");
  REQUIRE(ruled.parameters.size() == 1);
  CHECK(ruled.parameters[0] == 2);
  CHECK_THROWS(parse_entry("ruled:x"));
  CHECK_THROWS(parse_entry("k3"));
}
