#include "doctest.h"

#include "sumkit/oracles.hpp"
#include "sumkit/severi.hpp"

using namespace sumkit;
using namespace sumkit::severi;

TEST_CASE("profiles") {
  const Profile p = parse_profile("1:2,3:1");
  CHECK(weighted_sum(p) == 5);
  CHECK(count(p) == 3);
  CHECK(parse_profile(to_string(p)) == p);
  CHECK(parse_profile("").empty());
  CHECK(make_profile({0, 2, 0, 0}) == Profile{0, 2});
  CHECK(unit(2) == Profile{0, 1});
  CHECK_THROWS(parse_profile("1:x"));
  CHECK_THROWS(parse_profile("0:1"));
}

TEST_CASE("point counts") {
  CHECK(point_count(1, 0, {}, unit(1)) == 2);
  CHECK(point_count(3, 0, {}, Profile{3}) == 8);
  CHECK(point_count(2, 0, {}, Profile{2}) == 5);
  CHECK(genus_of(3, 1) == 0);
  CHECK(genus_of(4, 3) == 0);
}

TEST_CASE("severi degrees") {
  CHECK(severi_number(1, 0, {}, unit(1)) == 1);
  CHECK(severi_number(3, 1, {}, Profile{3}) == 12);
  CHECK(severi_number(4, 3, {}, Profile{4}) == 620);
  CHECK(tw_severi_number(4, 3, {}, Profile{4}) == 675);
  // Reducible curves: line pairs through 4 points, line plus conic through 7.
  CHECK(tw_severi_number(2, 1, {}, Profile{2}) == 3);
  CHECK(tw_severi_number(3, 2, {}, Profile{3}) == 21);
  CHECK(tw_severi_number(3, 1, {}, Profile{3}) == 12);
  CHECK(severi_number(3, 2, {}, Profile{3}) == 0);
  // Fixed tangency: conics tangent to a line at a fixed point through 3 points.
  CHECK(severi_number(2, 0, Profile{0, 1}, {}) == 1);
  // Invalid keys are zero rather than errors.
  CHECK(severi_number(2, 2, {}, Profile{2}) == 0);
}

TEST_CASE("rational degrees agree with the independent recursion") {
  CHECK(rational_degree(1) == 1);
  CHECK(rational_degree(2) == 1);
  for (int d = 1; d <= 5; ++d) CHECK(rational_degree(d) == oracles::kontsevich_oracle(d));
  CHECK(rational_degree(5) == 87304);
}

TEST_CASE("severi values are nonnegative and conserve the point count") {
  for (int d = 1; d <= 4; ++d) {
    for (int delta = 0; delta <= 3; ++delta) {
      for (int fixed = 0; fixed <= d; ++fixed) {
        const Profile alpha = make_profile({fixed});
        const Profile beta = make_profile({d - fixed});
        CHECK(tw_severi_number(d, delta, alpha, beta) >= 0);
        CHECK(severi_number(d, delta, alpha, beta) >= 0);
        // Trading a fixed tangency point for a moving one costs one point.
        if (fixed > 0) {
          const long g = genus_of(d, delta);
          CHECK(point_count(d, g, make_profile({fixed - 1}), make_profile({d - fixed + 1})) ==
                point_count(d, g, alpha, beta) + 1);
        }
      }
    }
  }
}

TEST_CASE("severi table") {
  const auto rows = severi_table(1, 0);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].value == 1);
  const auto more = severi_table(4, 3);
  for (const auto& row : more) CHECK(row.r >= 0);
}
