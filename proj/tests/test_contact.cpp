#include "doctest.h"

#include "sumkit/contact.hpp"
#include "sumkit/random_inputs.hpp"

using namespace sumkit;

TEST_CASE("sequence statistics") {
  auto s = seq_stats({{3, 0}});
  CHECK(s.length == 1);
  CHECK(s.degree == 3);
  CHECK(s.product == 3);
  s = seq_stats({});
  CHECK(s.length == 0);
  CHECK(s.degree == 0);
  CHECK(s.product == 1);
  s = seq_stats({{2, 0}, {3, 1}});
  CHECK(s.length == 2);
  CHECK(s.degree == 5);
  CHECK(s.product == 6);
}

TEST_CASE("multiset statistics and orderings") {
  ContactMultiset m;
  m.add(2, 0, 3);
  auto st = multiset_stats(m);
  CHECK(st.length == 3);
  CHECK(st.degree == 6);
  CHECK(st.product == 8);
  CHECK(st.factorial == 6);
  CHECK(ordered_multiplicity(m) == 1);

  st = multiset_stats(ContactMultiset());
  CHECK(st.length == 0);
  CHECK(st.product == 1);
  CHECK(st.factorial == 1);

  ContactMultiset n;
  n.add(1, 0, 2);
  n.add(3, 0);
  st = multiset_stats(n);
  CHECK(st.length == 3);
  CHECK(st.degree == 5);
  CHECK(st.product == 3);
  CHECK(st.factorial == 2);

  ContactMultiset k;
  k.add(1, 0);
  k.add(2, 0);
  CHECK(ordered_multiplicity(k) == 2);
  ContactMultiset j;
  j.add(1, 0, 2);
  j.add(2, 0, 2);
  CHECK(ordered_multiplicity(j) == 6);
}

TEST_CASE("multiset text round trip") {
  ContactMultiset m;
  m.add(2, 1, 2);
  m.add(1, 0);
  CHECK(ContactMultiset::parse(m.to_string()) == m);
  CHECK(ContactMultiset::from_seq({{2, 1}, {1, 0}, {2, 1}}) == m);
}

TEST_CASE("dual multisets") {
  ContactMultiset m;
  m.add(2, 0);
  const auto same = dual_multiset(m, IntersectionMatrix::identity(1));
  REQUIRE(same.size() == 1);
  CHECK(same.begin()->first == m);
  CHECK(same.begin()->second == 1);

  const auto swapped = dual_multiset(m, IntersectionMatrix::point_fundamental());
  ContactMultiset want;
  want.add(2, 1);
  REQUIRE(swapped.size() == 1);
  CHECK(swapped.begin()->first == want);
  CHECK(swapped.begin()->second == 1);
}

TEST_CASE("dual of dual through the inverse pairing is the original") {
  random_inputs::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto q = random_inputs::pairing(rng, 2);
    const auto qi = q.inverse();
    for (const auto& m : enumerate_multisets(3, 2)) {
      MultisetCombination back;
      for (const auto& [mid, w] : dual_multiset(m, q)) {
        for (const auto& [end, w2] : dual_multiset(mid, qi)) back[end] += w * w2;
      }
      for (auto it = back.begin(); it != back.end();) it = it->second == 0 ? back.erase(it) : std::next(it);
      REQUIRE(back.size() == 1);
      CHECK(back.begin()->first == m);
      CHECK(back.begin()->second == 1);
    }
  }
}

TEST_CASE("enumeration of multisets") {
  const auto zero = enumerate_multisets(0, 2);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
  CHECK(enumerate_multisets(2, 1).size() == 2);
  CHECK(enumerate_multisets(3, 1).size() == 3);
  for (const auto& m : enumerate_multisets(4, 2)) CHECK(m.degree() == 4);
}
