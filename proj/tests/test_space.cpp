#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"

using namespace skewring;
using skewring::testing::pts;

TEST_CASE("indicator algebra") {
  auto x = Space::finite(3);
  auto c = Carrier::gf(2);
  auto a = LcFun::indicator(x, c, pts(x, {1, 2}));
  auto b = LcFun::indicator(x, c, pts(x, {2, 3}));
  CHECK(a * b == LcFun::indicator(x, c, pts(x, {2})));
  CHECK((a + a).is_zero());
}

TEST_CASE("omega_plus sum merges pieces by value") {
  auto x = Space::omega_plus(3);
  auto q = Carrier::rationals();
  auto f = LcFun::indicator(x, q, x.full()) + LcFun::indicator(x, q, pts(x, {1}));
  auto p = f.pieces();
  REQUIRE(p.size() == 2);
  CHECK(p[0].first == pts(x, {1}));
  CHECK(p[0].second == Scalar(q, 2));
  CHECK(p[1].first == pts(x, {2, 3}, true, true));
  CHECK(p[1].second == Scalar(q, 1));
}

TEST_CASE("topology of the window model") {
  auto x = Space::omega_plus(2);
  auto tail = pts(x, {}, true);
  auto inf = pts(x, {}, false, true);
  CHECK(x.is_open(tail));
  CHECK_FALSE(x.is_compact_open(tail));
  CHECK_FALSE(x.is_open(inf));
  CHECK(x.closure(tail) == pts(x, {}, true, true));
  CHECK(x.interior(inf).none());
  CHECK(x.is_compact_open(pts(x, {2}, true, true)));
  CHECK(x.is_dense_in(pts(x, {1, 2}, true), x.full()));
  CHECK_FALSE(x.is_dense_in(pts(x, {1, 2}), x.full()));
  CHECK(x.atoms().size() == 3);
  CHECK(x.reference_point(x.atom_of(x.tail())) == x.infinity());
  CHECK_THROWS_AS(LcFun::indicator(x, Carrier::gf(2), tail), std::invalid_argument);
}

TEST_CASE("atoms from a family of sets") {
  auto x = Space::finite(3);
  CHECK(atoms(x, {x.full()}) == std::vector<PointSet>{x.full()});
  auto a = atoms(x, {pts(x, {1, 2}), pts(x, {2, 3})});
  CHECK(a == std::vector<PointSet>{pts(x, {1}), pts(x, {2}), pts(x, {3})});
  auto w = Space::omega_plus(3);
  auto b = atoms(w, {pts(w, {3}, true, true)});
  CHECK(b == std::vector<PointSet>{pts(w, {1, 2}), pts(w, {3}, true, true)});
}

TEST_CASE("ideal to open set correspondence") {
  auto x = Space::finite(3);
  auto c = Carrier::gf(2);
  auto none = ideal_closure(x, c, ideal_of_open(x, c, x.empty()));
  CHECK(none.basis.rank() == 0);
  auto all = ideal_closure(x, c, ideal_of_open(x, c, x.full()));
  CHECK(all.basis.rank() == 3);
  auto f = LcFun::indicator(x, c, pts(x, {1})) + LcFun::indicator(x, c, pts(x, {2}));
  auto i = ideal_closure(x, c, {f});
  CHECK(i.support == pts(x, {1, 2}));
  CHECK(i.basis.rank() == 2);
  CHECK(vanishing_ideal(x, c, pts(x, {3})).size() == 2);
}

TEST_CASE("every function is a sum of disjoint compact-open pieces") {
  auto x = Space::omega_plus(3);
  auto c = Carrier::gf(3);
  std::vector<Scalar> v{Scalar(c, 1), Scalar(c, 2), Scalar(c, 1), Scalar(c, 2), Scalar(c, 2)};
  LcFun f(x, v);
  LcFun g(x, c);
  PointSet used = x.empty();
  for (auto const& [set, val] : f.pieces()) {
    CHECK(x.is_compact_open(set));
    CHECK_FALSE(set.intersects(used));
    used |= set;
    g += LcFun::indicator(x, c, set, val);
  }
  CHECK(f == g);
  CHECK(from_atom_coordinates(x, c, atom_coordinates(f)) == f);
  v.back() = Scalar(c, 1);
  CHECK_THROWS_AS(LcFun(x, v), std::invalid_argument);
}
