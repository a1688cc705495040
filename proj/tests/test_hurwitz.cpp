#include "doctest.h"

#include "sumkit/hurwitz.hpp"
#include "sumkit/oracles.hpp"

using namespace sumkit;
using namespace sumkit::hurwitz;

TEST_CASE("partitions") {
  CHECK(partitions(1).size() == 1);
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(6).size() == 11);
  for (const auto& p : partitions(5)) CHECK(std::is_sorted(p.rbegin(), p.rend()));
}

TEST_CASE("branch counts") {
  CHECK(branch_count(1, 0, {1}) == 0);
  CHECK(branch_count(2, 0, {2}) == 1);
  CHECK(branch_count(2, 0, {1, 1}) == 2);
  CHECK(branch_count(3, 1, {3}) == 4);
}

TEST_CASE("hurwitz numbers") {
  CHECK(hurwitz_number(1, 0, {1}) == 1);
  CHECK(hurwitz_number(2, 0, {2}) == make_rational(1, 2));
  CHECK(hurwitz_number(2, 0, {1, 1}) == make_rational(1, 2));
  CHECK(hurwitz_number(3, 0, {3}) == 1);
  // Invalid keys are zero.
  CHECK(hurwitz_number(1, 1, {1}) == 0);
  CHECK(hurwitz_number(4, 0, {4, 2}) == 0);
}

TEST_CASE("hurwitz numbers match transposition enumeration") {
  for (int d = 1; d <= 5; ++d) {
    for (const auto& alpha : partitions(d)) {
      for (int g = 0; g <= 2; ++g) {
        const long r = branch_count(d, g, alpha);
        if (r < 0 || r > 6) continue;
        const Rational n = hurwitz_number(d, g, alpha);
        CHECK(n == oracles::hurwitz_oracle(d, g, alpha));
        CHECK(n >= 0);
        CHECK(factorial(static_cast<unsigned>(d)) % n.get_den() == 0);
      }
    }
  }
}

TEST_CASE("cut-join residual vanishes") {
  CHECK(cut_join_residual(0, 0).is_zero());
  CHECK(cut_join_residual(2, 2).is_zero());
  CHECK(cut_join_residual(4, 4).is_zero());
}

namespace {

// Left minus right side of the cut-join equation, assembled directly.
Series cut_join(const Series& g, int d_max) {
  const auto ctx = g.context();
  const int c = g.cutoff();
  const Series lambda2 = Series::monomial(ctx, c, {{"lambda", 2}});
  Series rhs(ctx, c);
  for (int i = 1; i <= d_max; ++i) {
    for (int j = 1; i + j <= d_max; ++j) {
      const std::string zi = "z" + std::to_string(i);
      const std::string zj = "z" + std::to_string(j);
      const std::string zij = "z" + std::to_string(i + j);
      const Series join = differentiate(differentiate(g, zi), zj) + differentiate(g, zi) * differentiate(g, zj);
      rhs += Rational(i * j) * (lambda2 * Series::variable(ctx, c, zij) * join);
      rhs += Rational(i + j) * (Series::variable(ctx, c, zi) * Series::variable(ctx, c, zj) * differentiate(g, zij));
    }
  }
  return differentiate(g, "u") - make_rational(1, 2) * rhs;
}

}  // namespace

TEST_CASE("cut-join residual detects a perturbed coefficient") {
  Series g = generating_series(3, 3);
  const auto ctx = g.context();
  // The double cover branched over one point besides infinity.
  Monomial cover = Monomial::one(ctx->size());
  cover[ctx->index("t")] = 2;
  cover[ctx->index("lambda")] = -2;
  cover[ctx->index("z2")] = 1;
  Monomial with_branch = cover;
  with_branch[ctx->index("u")] = 1;
  REQUIRE(coefficient(g, with_branch) == make_rational(1, 2));

  CHECK(coefficient(cut_join(g, 3), cover) == 0);
  g.accumulate(with_branch, make_rational(1, 3));
  CHECK(coefficient(cut_join(g, 3), cover) == make_rational(1, 3));
}
