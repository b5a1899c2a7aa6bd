#include <doctest.h>

#include "helpers.hpp"
#include "skewring/analysis.hpp"
#include "skewring/gallery.hpp"

using namespace skewring;
using skewring::testing::from_n;
using skewring::testing::pts;
using skewring::testing::same_span;
using skewring::testing::term;

TEST_CASE("idempotent slices act as local units") {
  SkewRing r(munn_action(min_semilattice(2)), Carrier::gf(3));
  auto const& x = r.space();
  auto e = term(r, "1", x.full());
  auto a = term(r, "1", pts(x, {2}), 2);
  CHECK(r.multiply(e, a) == a);
  CHECK(r.multiply(a, e) == a);
}

TEST_CASE("snake product rule") {
  SkewRing r(snake_action(4), Carrier::rationals());
  auto const& x = r.space();
  auto lhs = r.multiply(term(r, "z", from_n(x, 2)), term(r, "z", from_n(x, 3)));
  CHECK(lhs == term(r, "inf", from_n(x, 3)));
}

TEST_CASE("Z/2 swap: a slice squares to zero") {
  SkewRing r(translation_action(2), Carrier::gf(2));
  auto t = term(r, "1", pts(r.space(), {1}));
  CHECK(r.multiply(t, t).is_zero());
  auto u = term(r, "1", pts(r.space(), {2}));
  CHECK(r.multiply(t, u) == term(r, "0", pts(r.space(), {1})));
}

TEST_CASE("the two zero-mod-N engines on basic elements") {
  SkewRing r(snake_action(4), Carrier::gf(3));
  auto const& x = r.space();
  auto d = term(r, "2", pts(x, {1, 2})) - term(r, "z", pts(x, {1, 2}));
  auto v = r.to_L(d);
  CHECK(r.in_N(v));
  CHECK(r.germ_zero(v));
  CHECK(r.tau(d).is_zero());
  // no single homogeneous term lies in N
  for (std::size_t i = 0; i < r.dim_L(); ++i) {
    auto e = unit_vector(r.carrier(), r.dim_L(), i);
    CHECK_FALSE(r.in_N(e));
    CHECK_FALSE(r.germ_zero(e));
  }
  for (auto const& g : r.n_generators()) {
    CHECK(r.tau_L(g).is_zero());
    CHECK(r.germ_zero(g));
  }
}

TEST_CASE("germ normal form of the snake ideal generator lives at infinity only") {
  SkewRing r(snake_action(4), Carrier::gf(2));
  auto const& x = r.space();
  for (std::size_t n = 1; n <= 4; ++n) {
    auto g = r.germ_normal_form(r.to_L(term(r, "z", from_n(x, n)) - term(r, "inf", from_n(x, n))));
    REQUIRE_FALSE(g.empty());
    for (auto const& [key, val] : g) CHECK(key.first == x.infinity());
  }
}

TEST_CASE("re-expansion of a germ normal form differs by an element of N") {
  SkewRing r(snake_action(3), Carrier::gf(3));
  Vector v = zero_vector(r.carrier(), r.dim_L());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Scalar(r.carrier(), static_cast<std::int64_t>(i % 3));
  auto d = v;
  axpy(d, -Scalar::one(r.carrier()), r.reexpand(r.germ_normal_form(v)));
  CHECK(r.in_N(d));
  CHECK(r.germ_zero(d));
}

TEST_CASE("tau and the diagonal embedding") {
  SkewRing r(snake_action(3), Carrier::rationals());
  auto const& x = r.space();
  auto a = LcFun::indicator(x, r.carrier(), from_n(x, 2), Scalar(r.carrier(), 3, 2));
  auto z = r.semigroup().index("z");
  CHECK(r.tau(r.term(z, a)) == a);
  CHECK(r.tau(r.phi(a)) == a);
  // phi(1_{X_e}) agrees with 1_{X_e} delta_e modulo N
  for (auto e : r.semigroup().idempotents()) {
    if (!x.is_compact_open(r.action().domain(e))) continue;  // X_{>W} has no indicator
    auto ind = LcFun::indicator(x, r.carrier(), r.action().domain(e));
    auto diff = r.to_L(r.phi(ind) - r.term(e, ind));
    CHECK(r.in_N(diff));
  }
  // ring morphism on the atom spanning set
  for (auto const& p : x.atoms())
    for (auto const& q : x.atoms()) {
      auto f = LcFun::indicator(x, r.carrier(), p);
      auto g = LcFun::indicator(x, r.carrier(), q);
      auto lhs = r.to_L(r.phi(f * g));
      axpy(lhs, -Scalar::one(r.carrier()), r.to_L(r.multiply(r.phi(f), r.phi(g))));
      CHECK(r.in_N(lhs));
      auto add = r.to_L(r.phi(f + g) - r.phi(f) - r.phi(g));
      CHECK(r.in_N(add));
    }
}

TEST_CASE("snake: 1_[n,inf] delta_z commutes with D and lies outside it") {
  SkewRing r(snake_action(4), Carrier::gf(2));
  auto const& x = r.space();
  for (std::size_t n = 1; n <= 4; ++n) {
    auto v = r.to_L(term(r, "z", from_n(x, n)));
    CHECK_FALSE(r.in_diagonal_span(v));
    CHECK_FALSE(r.in_diagonal_germs(v));
    auto q = r.project(v);
    for (auto const& atom : x.atoms()) {
      auto d = r.project(r.to_L(r.phi(LcFun::indicator(x, r.carrier(), atom))));
      CHECK(r.mul(q, d) == r.mul(d, q));
    }
  }
  auto mc = r.max_commutative();
  CHECK_FALSE(mc.maximal);
  REQUIRE(mc.witness);
  CHECK_FALSE(r.in_diagonal_span(r.lift(*mc.witness)));
}

TEST_CASE("maximal commutativity on small examples") {
  CHECK(SkewRing(translation_action(2), Carrier::gf(3)).max_commutative().maximal);
  SkewRing semi(munn_action(min_semilattice(2)), Carrier::gf(2));
  auto mc = semi.max_commutative();
  CHECK(mc.maximal);
  CHECK(mc.dim_diagonal == semi.dim());
}

TEST_CASE("S-simplicity") {
  SkewRing sn(snake_action(4), Carrier::gf(2));
  auto s = sn.s_simple();
  CHECK_FALSE(s.s_simple);
  REQUIRE(s.witness);
  CHECK(*s.witness == pts(sn.space(), {1}));
  CHECK(SkewRing(translation_action(2), Carrier::gf(3)).s_simple().s_simple);
  CHECK(SkewRing(munn_action(cyclic_group(1)), Carrier::gf(2)).s_simple().s_simple);
}

TEST_CASE("ideal generated by zero is zero") {
  SkewRing r(translation_action(2), Carrier::gf(3));
  CHECK(r.ideal_generated_by(zero_vector(r.carrier(), r.dim())).rank() == 0);
}

TEST_CASE("snake ideal J_n is the span of its described generators") {
  for (auto c : {Carrier::gf(2), Carrier::rationals()}) {
    SkewRing r(snake_action(4), c);
    auto const& x = r.space();
    for (std::size_t n = 1; n <= 4; ++n) {
      auto gen = [&](std::size_t m) { return r.project(r.to_L(term(r, "z", from_n(x, m)) - term(r, "inf", from_n(x, m)))); };
      auto j = r.ideal_generated_by(gen(n));
      EchelonBasis described(c, r.dim());
      for (std::size_t m = n; m <= 4; ++m) described.insert(gen(m));
      // beyond the window: the tail block itself
      auto tail = pts(x, {}, true, true);
      described.insert(r.project(r.to_L(term(r, "z", tail) - term(r, "inf", tail))));
      CHECK(same_span(j, described));
      CHECK(intersection_dim(j, r.diagonal()) == 0);
      for (auto const& row : j.rows()) CHECK(r.tau_q(row).is_zero());
    }
  }
}

TEST_CASE("centralizer element yields a proper ideal on which tau vanishes") {
  SkewRing r(snake_action(3), Carrier::gf(3));
  auto mc = r.max_commutative();
  REQUIRE(mc.witness);
  auto x = centralizer_ideal_generator(r, *mc.witness);
  CHECK_FALSE(is_zero(x));
  auto j = r.ideal_generated_by(x);
  CHECK(j.rank() < r.dim());
  for (auto const& row : j.rows()) CHECK(r.tau_q(row).is_zero());
}

TEST_CASE("quotient structure constants match multiplication in L") {
  SkewRing r(snake_action(3), Carrier::gf(2));
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t k = 0; k < r.dim(); ++k) {
      auto a = unit_vector(r.carrier(), r.dim(), i), b = unit_vector(r.carrier(), r.dim(), k);
      CHECK(r.mul(a, b) == r.project(r.mul_L(r.lift(a), r.lift(b))));
    }
  CHECK(r.dim() + r.dim_N() == r.dim_L());
}

TEST_CASE("non-field carriers keep L but refuse the quotient") {
  SkewRing r(translation_action(2), Carrier::zmod(4));
  CHECK(r.dim_L() == 4);
  CHECK_THROWS_AS(r.dim(), std::domain_error);
  CHECK(r.germ_zero(zero_vector(r.carrier(), 4)));
}
