#include "doctest.h"

#include "sumkit/catalog.hpp"
#include "sumkit/random_inputs.hpp"
#include "sumkit/sum_engine.hpp"

using namespace sumkit;

namespace {

RelKey empty_key(const GeometryPtr& g) {
  RelKey k;
  k.cls = ClassKey(static_cast<std::size_t>(g->class_dim), 0);
  k.contacts.assign(static_cast<std::size_t>(g->end_count()), ContactMultiset());
  return k;
}

}  // namespace

TEST_CASE("exponential of the zero series is the unit") {
  const auto g = product_closed_geometry();
  const RelSeries tw = tw_from_gw(RelSeries(g, 4));
  REQUIRE(tw.size() == 1);
  CHECK(tw.coefficient(empty_key(g)) == 1);
}

TEST_CASE("second-order term of the exponential") {
  const auto g = product_closed_geometry();
  RelSeries gw(g, 4);
  RelKey a = empty_key(g);
  a.cls = {1, 0};
  a.chi = 2;
  gw.accumulate(a, make_rational(3, 5));
  const RelSeries tw = tw_from_gw(gw);
  RelKey twice = empty_key(g);
  twice.cls = {2, 0};
  twice.chi = 4;
  CHECK(tw.coefficient(twice) == make_rational(9, 50));
  CHECK(gw_from_tw(tw) == gw);
}

TEST_CASE("log and exp are inverse on random relative series") {
  random_inputs::Rng rng(11);
  const auto g = product_neck_geometry(2);
  for (int i = 0; i < 20; ++i) {
    const RelSeries gw = random_inputs::rel_series(rng, g, 4, 5, 1, {"1"});
    CHECK(gw_from_tw(tw_from_gw(gw)) == gw);
  }
}

TEST_CASE("identity element is a two-sided unit") {
  random_inputs::Rng rng(5);
  for (int basis = 1; basis <= 2; ++basis) {
    const auto neck = product_neck_geometry(basis);
    const auto glue = neck_gluing(neck);
    for (int i = 0; i < 15; ++i) {
      const auto q = random_inputs::pairing(rng, basis);
      const RelSeries unit = identity_element(neck, q, 4);
      const RelSeries x = random_inputs::rel_series(rng, neck, 4, 6, 0, {"1", "p"});
      CHECK(convolve(x, unit, q, glue) == x);
      CHECK(convolve(unit, x, q, glue) == x);
      CHECK(convolve_via_operator(unit, x, q, glue) == x);
    }
  }
}

TEST_CASE("S-matrix and neck identity of the unit") {
  const auto neck = product_neck_geometry(1);
  const auto q = IntersectionMatrix::identity(1);
  const RelSeries unit = identity_element(neck, q, 3);
  CHECK(s_matrix(unit, q) == unit);
  for (int n = 1; n <= 5; ++n) CHECK(neck_identity(unit, q, n) == unit);
  CHECK_THROWS(neck_identity(unit, q, 0));
}

TEST_CASE("neck identity with square-zero R") {
  // One term of projected area 1 at cutoff 1, so R*R vanishes.
  const auto neck = product_neck_geometry(1);
  const auto q = IntersectionMatrix::identity(1);
  const RelSeries unit = identity_element(neck, q, 1);
  RelSeries r(neck, 1);
  RelKey k = empty_key(neck);
  k.cls = {1, 0};
  k.chi = 2;
  r.accumulate(k, make_rational(2, 3));
  REQUIRE(convolve(r, r, q, neck_gluing(neck)).is_zero());
  CHECK(neck_identity(unit + r, q, 1) == unit - r);
  CHECK(s_matrix(unit + r, q) == unit - r);
}

TEST_CASE("S-matrix inverts random I + R") {
  random_inputs::Rng rng(17);
  const auto neck = product_neck_geometry(2);
  const auto glue = neck_gluing(neck);
  for (int i = 0; i < 20; ++i) {
    const auto q = random_inputs::pairing(rng, 2);
    const RelSeries unit = identity_element(neck, q, 3);
    const RelSeries tw = unit + random_inputs::rel_series(rng, neck, 3, 4, 1, {"1"});
    const RelSeries s = s_matrix(tw, q);
    CHECK(convolve(s, tw, q, glue) == unit);
    CHECK(convolve(tw, s, q, glue) == unit);
  }
}

TEST_CASE("S-matrix of a surface target is the identity") {
  const auto g = catalog::p1_geometry();
  const auto q = IntersectionMatrix::identity(1);
  const RelSeries tw = tw_from_gw(catalog::p1_series(6));
  CHECK(tw == identity_element(g, q, 6));
  CHECK(s_matrix(tw, q) == identity_element(g, q, 6));
}

TEST_CASE("self-gluing the line at two points") {
  for (int d = 1; d <= 6; ++d) CHECK(catalog::p1_self_gluing(d) == make_rational(1, d));
  const auto g = catalog::p1_geometry();
  const auto q = IntersectionMatrix::identity(1);
  const RelSeries p = catalog::p1_series(4);
  CHECK(convolve(p, p, q, neck_gluing(g)) == convolve_via_operator(p, p, q, neck_gluing(g)));
}

TEST_CASE("Euler characteristics add across a sum along a torus") {
  // Degree-0 genus-1 invariants carry chi(X) - chi(V); a rational elliptic
  // surface on each side gives 12 + 12, the Euler characteristic of K3.
  const auto end = product_end_geometry(1);
  const auto neck = product_neck_geometry(1);
  const Gluing glue{product_closed_geometry(), neck->self_gluing};
  const auto q = IntersectionMatrix::identity(1);
  RelKey point = empty_key(end);
  point.cls = {1, 0};
  RelSeries x(end, 1);
  x.accumulate(point, 12);
  RelSeries y(end, 1);
  y.accumulate(point, 12);
  const RelSeries glued = gw_from_tw(convolve(tw_from_gw(x), tw_from_gw(y), q, glue));
  RelKey closed_point = empty_key(glue.result);
  closed_point.cls = {1, 0};
  CHECK(glued.size() == 1);
  CHECK(glued.coefficient(closed_point) == 24);
}

TEST_CASE("convolution rejects mismatched pairings") {
  const auto neck = product_neck_geometry(2);
  const RelSeries x(neck, 2);
  CHECK_THROWS(convolve(x, x, IntersectionMatrix::identity(1), neck_gluing(neck)));
}

TEST_CASE("alternating binomial sums") {
  CHECK(inclusion_exclusion_check(1) == 1);
  CHECK(inclusion_exclusion_check(2) == 1);
  CHECK(inclusion_exclusion_check(10) == 1);
  CHECK_THROWS(inclusion_exclusion_check(0));
}

TEST_CASE("dimension formula") {
  const auto g = catalog::p1_geometry();
  CHECK(moduli_dimension(*g, {1}, 2, 0, {{1, 0}, {1, 0}}, 2) == 0);
  // Relative to two points the real dimension is 2(2g - 2 + l(s) + l(s')).
  for (int d = 1; d <= 4; ++d) {
    for (int genus = 0; genus <= 2; ++genus) {
      const ContactSeq s = {{d, 0}};
      const ContactSeq s2(static_cast<std::size_t>(d), Contact{1, 0});
      ContactSeq both = s;
      both.insert(both.end(), s2.begin(), s2.end());
      CHECK(moduli_dimension(*g, {d}, 2 - 2 * genus, 0, both, 2) == 2 * (2 * genus - 2 + 1 + d));
    }
  }
  CHECK(sum_canonical(0, 0, 0) == 0);
  CHECK(sum_canonical(-3, 1, 2) == 2);
}

TEST_CASE("json round trip") {
  random_inputs::Rng rng(23);
  const auto neck = product_neck_geometry(2);
  const RelSeries x = random_inputs::rel_series(rng, neck, 3, 6, 0, {"1", "p"});
  CHECK(rel_series_from_json(to_json(x), neck) == x);
}
