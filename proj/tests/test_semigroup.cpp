#include <doctest.h>

#include "skewring/corpus.hpp"
#include "skewring/diagnostic.hpp"
#include "skewring/semigroup.hpp"

using namespace skewring;

namespace {

void check_order_compatible(InverseSemigroup const& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (!s.leq(a, b)) continue;
      CHECK(s.leq(s.star(a), s.star(b)));
      for (std::size_t u = 0; u < s.size(); ++u)
        for (std::size_t v = 0; v < s.size(); ++v)
          if (s.leq(u, v)) CHECK(s.leq(s.mul(a, u), s.mul(b, v)));
    }
}

}  // namespace

TEST_CASE("min semilattice: all idempotent, star is the identity, order is numeric") {
  auto s = min_semilattice(3);
  CHECK(s.idempotents().size() == 3);
  for (std::size_t a = 0; a < 3; ++a) {
    CHECK(s.star(a) == a);
    for (std::size_t b = 0; b < 3; ++b) CHECK(s.leq(a, b) == (a <= b));
  }
}

TEST_CASE("snake semigroup table and order") {
  auto s = snake_semigroup(3);
  auto i = [&](char const* l) { return s.index(l); };
  CHECK(s.size() == 5);
  CHECK(s.mul(i("2"), i("3")) == i("2"));
  CHECK(s.mul(i("z"), i("z")) == i("inf"));
  CHECK(s.mul(i("z"), i("inf")) == i("z"));
  CHECK(s.mul(i("2"), i("z")) == i("2"));
  CHECK(s.star(i("z")) == i("z"));
  CHECK(s.leq(i("1"), i("3")));
  CHECK_FALSE(s.leq(i("3"), i("1")));
  for (char const* n : {"1", "2", "3"}) {
    CHECK(s.leq(i(n), i("inf")));
    CHECK(s.leq(i(n), i("z")));
  }
  CHECK_FALSE(s.leq(i("inf"), i("z")));
  CHECK_FALSE(s.leq(i("z"), i("inf")));
  // unital: every idempotent sits below the unit
  REQUIRE(s.unit());
  for (auto e : s.idempotents()) CHECK(s.leq(e, *s.unit()));
  check_order_compatible(s);
}

TEST_CASE("left-zero table is rejected for a non-unique inverse") {
  try {
    InverseSemigroup::from_table({"a", "b"}, {{0, 0}, {1, 1}});
    FAIL("accepted a left-zero semigroup");
  } catch (ValidationError const& e) {
    CHECK(e.diagnostic().axiom == "inverse");
    CHECK(e.diagnostic().message == "inverse not unique");
    CHECK(e.diagnostic().witness.front() == "a");
  }
}

TEST_CASE("non-associative table is rejected with a witness triple") {
  try {
    InverseSemigroup::from_table({"a", "b"}, {{1, 0}, {0, 0}});
    FAIL("accepted");
  } catch (ValidationError const& e) {
    CHECK(e.diagnostic().axiom == "associativity");
    CHECK(e.diagnostic().witness.size() == 3);
  }
}

TEST_CASE("bad unit and oversize input") {
  CHECK_THROWS_AS(InverseSemigroup::from_table({"0", "1"}, {{0, 0}, {0, 1}}, 0), ValidationError);
  CHECK_THROWS_AS(InverseSemigroup::from_table({"0", "1"}, {{0, 0}, {0, 1}}, std::nullopt, 1), ValidationError);
  CHECK_THROWS_AS(InverseSemigroup::from_table({}, {}), ValidationError);
}

TEST_CASE("groups have one idempotent") {
  auto g = cyclic_group(3);
  CHECK(g.is_group());
  CHECK(g.star(1) == 2);
}

TEST_CASE("order is compatible with products on partial permutation semigroups") {
  // all partial injections of {1,2}: the symmetric inverse monoid I_2
  auto s = partial_perm_semigroup({{1, 0}, {0, -1}, {1, -1}});
  CHECK(s.size() == 7);
  check_order_compatible(s);
}
