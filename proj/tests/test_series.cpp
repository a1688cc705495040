#include "doctest.h"

#include "sumkit/errors.hpp"
#include "sumkit/random_inputs.hpp"
#include "sumkit/series.hpp"

using namespace sumkit;

namespace {

ContextPtr t_ctx() { return make_context({{"t", 1, false}}); }

Series t_series(const ContextPtr& ctx, int cutoff, std::initializer_list<long> coeffs) {
  Series s(ctx, cutoff);
  int n = 0;
  for (long c : coeffs) {
    if (n <= cutoff) s.accumulate(Monomial({n}), Rational(c));
    ++n;
  }
  return s;
}

// sum_{n>=1} sigma(n) t^n, counted by enumerating divisor pairs.
Series divisor_series(const ContextPtr& ctx, int cutoff) {
  Series s(ctx, cutoff);
  for (int d = 1; d <= cutoff; ++d) {
    for (int n = d; n <= cutoff; n += d) s.accumulate(Monomial({n}), Rational(d));
  }
  return s;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("addition cancels and keeps identities") {
  const auto ctx = t_ctx();
  const Series a = t_series(ctx, 4, {1, 1});
  const Series b = t_series(ctx, 4, {-1, 1});
  const Series sum = add(a, b);
  CHECK(sum.size() == 1);
  CHECK(coefficient(sum, Monomial({1})) == 2);
  CHECK(add(a, Series(ctx, 4)) == a);
  const Series g = divisor_series(ctx, 6);
  CHECK(coefficient(add(g, g), Monomial({4})) == 14);
}

TEST_CASE("multiplication and laurent exponents") {
  const auto ctx = t_ctx();
  const Series p = mul(t_series(ctx, 5, {1, 1}), t_series(ctx, 5, {1, -1}));
  CHECK(p == t_series(ctx, 5, {1, 0, -1}));

  const auto lctx = make_context({{"t", 1, false}, {"lambda", 0, true}});
  Series a(lctx, 4);
  a.accumulate(Monomial({1, -2}), 1);
  Series b(lctx, 4);
  b.accumulate(Monomial({1, 2}), 1);
  const Series ab = mul(a, b);
  CHECK(ab.size() == 1);
  CHECK(coefficient(ab, Monomial({2, 0})) == 1);

  // prod_{d<=4} 1/(1-t^d) at t^4 counts partitions of 4.
  Series prod = Series::constant(ctx, 4, 1);
  for (int d = 1; d <= 4; ++d) {
    Series f = Series::constant(ctx, 4, 1);
    f.accumulate(Monomial({d}), -1);
    prod = mul(prod, inverse(f));
  }
  CHECK(coefficient(prod, Monomial({4})) == 5);
}

TEST_CASE("exp and log") {
  const auto ctx = t_ctx();
  CHECK(exp(Series(ctx, 5)) == Series::constant(ctx, 5, 1));
  const Series e = exp(Series::variable(ctx, 5, "t"));
  CHECK(coefficient(e, Monomial({2})) == make_rational(1, 2));
  CHECK(coefficient(e, Monomial({3})) == make_rational(1, 6));
  CHECK(log(Series::constant(ctx, 5, 1)).is_zero());
  const Series geo = inverse(t_series(ctx, 8, {1, -1}));
  const Series lg = log(geo);
  for (int n = 1; n <= 8; ++n) CHECK(coefficient(lg, Monomial({n})) == make_rational(1, n));
  CHECK_THROWS_AS(log(Series(ctx, 3)), DomainError);
}

TEST_CASE("differentiation and coefficients") {
  const auto ctx = t_ctx();
  const Series cube = Series::monomial(ctx, 5, {{"t", 3}});
  const Series d = differentiate(cube, "t");
  CHECK(d.size() == 1);
  CHECK(coefficient(d, Monomial({2})) == 3);
  CHECK(coefficient(t_series(ctx, 3, {1, 0, -1}), Monomial({2})) == -1);
  CHECK(coefficient(divisor_series(ctx, 8), Monomial({6})) == 12);
  CHECK_THROWS_AS(coefficient(t_series(ctx, 3, {1}), Monomial({4})), CutoffExceeded);
}

TEST_CASE("context mismatch is rejected") {
  const Series a(t_ctx(), 3);
  const Series b(make_context({{"x", 1, false}}), 3);
  CHECK_THROWS_AS(add(a, b), ContextMismatch);
}

TEST_CASE("text round trip") {
  const auto ctx = make_context({{"x", 1, false}, {"y", 2, false}, {"lambda", 0, true}});
  random_inputs::Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const Series f = random_inputs::series(rng, ctx, 6, 6, 0, true);
    CHECK(from_text(ctx, 6, to_text(f)) == f);
  }
}

TEST_CASE("ring axioms, Leibniz and exp/log inverses on random input") {
  const auto ctx = random_inputs::property_context();
  random_inputs::Rng rng(99);
  for (int i = 0; i < 40; ++i) {
    const int cutoff = 8;
    const Series a = random_inputs::series(rng, ctx, cutoff, 5, 0, true);
    const Series b = random_inputs::series(rng, ctx, cutoff, 5, 0, true);
    const Series c = random_inputs::series(rng, ctx, cutoff, 5, 0, true);
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(truncate(differentiate(mul(a, b), "x"), cutoff - 1) ==
          truncate(add(mul(differentiate(a, "x"), b), mul(a, differentiate(b, "x"))), cutoff - 1));

    const Series f = random_inputs::series(rng, ctx, cutoff, 5, 1, false);
    CHECK(log(exp(f)) == f);
    CHECK(exp(log(add(Series::constant(ctx, cutoff, 1), f))) == add(Series::constant(ctx, cutoff, 1), f));
  }
}
