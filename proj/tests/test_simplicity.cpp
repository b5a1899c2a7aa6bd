#include <doctest.h>

#include "helpers.hpp"
#include "skewring/corpus.hpp"
#include "skewring/gallery.hpp"
#include "skewring/simplicity.hpp"

using namespace skewring;

TEST_CASE("projective counts and the cap") {
  CHECK(*projective_count(2, 3) == 7);
  CHECK(*projective_count(3, 2) == 4);
  CHECK(within_bruteforce_cap(Carrier::gf(2), 14, 14));
  CHECK_FALSE(within_bruteforce_cap(Carrier::gf(2), 15, 14));
  CHECK(within_bruteforce_cap(Carrier::gf(3), 9, 14));
  CHECK_FALSE(within_bruteforce_cap(Carrier::gf(3), 10, 14));
  CHECK_FALSE(within_bruteforce_cap(Carrier::rationals(), 1, 14));
}

TEST_CASE("Z/2 translation over GF(3) is simple in both modes") {
  SkewRing r(translation_action(2), Carrier::gf(3));
  auto bf = brute_force(r);
  REQUIRE(bf.ran);
  CHECK(bf.vectors == 40);
  CHECK(bf.simple);
  CHECK(criterion(r).simple);
}

TEST_CASE("snake over GF(2) is not simple and fails maximal commutativity") {
  SkewRing r(snake_action(4), Carrier::gf(2));
  auto bf = brute_force(r);
  REQUIRE(bf.ran);
  CHECK_FALSE(bf.simple);
  CHECK_FALSE(bf.all_meet_diagonal);
  CHECK(bf.proper_ideal_generator);
  auto c = criterion(r);
  CHECK_FALSE(c.max_commutative);
  CHECK_FALSE(c.simple);
}

TEST_CASE("semilattice acting on itself is not simple") {
  SkewRing r(munn_action(min_semilattice(2)), Carrier::gf(2));
  CHECK_FALSE(brute_force(r).simple);
  CHECK_FALSE(criterion(r).s_simple);
}

TEST_CASE("brute force is skipped over Q and above the cap") {
  SkewRing q(translation_action(2), Carrier::rationals());
  auto a = brute_force(q);
  CHECK_FALSE(a.ran);
  CHECK_FALSE(a.skipped.empty());
  SkewRing big(snake_action(4), Carrier::gf(2));
  CHECK_FALSE(brute_force(big, 3).ran);
}

TEST_CASE("criterion agrees with brute force on a small corpus") {
  CorpusOptions opt;
  opt.count = 20;
  opt.seed = 3;
  for (auto const& e : generate_corpus(opt)) {
    SkewRing r(e.action, Carrier::gf(2));
    auto bf = brute_force(r);
    REQUIRE(bf.ran);
    auto c = criterion(r);
    CHECK(bf.simple == c.simple);
    CHECK(bf.all_meet_diagonal == c.max_commutative);
  }
}
