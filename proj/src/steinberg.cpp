#include "skewring/steinberg.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include <fmt/format.h>

#include "skewring/diagnostic.hpp"

namespace skewring {

namespace {

[[noreturn]] void fail(std::string axiom, std::string message, std::vector<std::string> witness) {
  throw ValidationError(Diagnostic{std::move(axiom), std::move(message), std::move(witness)});
}

}  // namespace

Groupoid Groupoid::create(std::vector<std::string> arrows, std::vector<std::string> const& src,
                          std::vector<std::string> const& rng, std::vector<std::string> const& inv,
                          std::vector<Composition> const& compose) {
  std::size_t const n = arrows.size();
  if (n == 0) fail("shape", "groupoid has no arrows", {});
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (!idx.emplace(arrows[i], i).second) fail("shape", "duplicate arrow label", {arrows[i]});
  auto lookup = [&](std::string const& l, char const* what) {
    auto it = idx.find(l);
    if (it == idx.end()) fail("shape", fmt::format("{} refers to unknown arrow", what), {l});
    return it->second;
  };
  if (src.size() != n || rng.size() != n || inv.size() != n)
    fail("shape", "src, rng and inv must be given for every arrow", {});

  Groupoid g;
  g.labels_ = std::move(arrows);
  for (std::size_t a = 0; a < n; ++a) {
    g.src_.push_back(lookup(src[a], "src"));
    g.rng_.push_back(lookup(rng[a], "rng"));
    g.inv_.push_back(lookup(inv[a], "inv"));
  }
  auto const& L = g.labels_;

  std::vector<bool> unit(n, false);
  for (std::size_t a = 0; a < n; ++a) unit[g.src_[a]] = unit[g.rng_[a]] = true;
  g.unit_position_.assign(n, -1);
  for (std::size_t u = 0; u < n; ++u) {
    if (!unit[u]) continue;
    if (g.src_[u] != u || g.rng_[u] != u) fail("units", "a unit must be its own source and range", {L[u]});
    if (g.inv_[u] != u) fail("units", "a unit must be its own inverse", {L[u]});
    g.unit_position_[u] = static_cast<long>(g.units_.size());
    g.units_.push_back(u);
  }

  g.compose_.assign(n, std::vector<long>(n, -1));
  auto set = [&](std::size_t c, std::size_t d, std::size_t cd) {
    if (g.src_[c] != g.rng_[d]) fail("composition", "composed pair is not composable", {L[c], L[d]});
    long& slot = g.compose_[c][d];
    if (slot >= 0 && static_cast<std::size_t>(slot) != cd)
      fail("composition", "pair composed to two different arrows", {L[c], L[d]});
    slot = static_cast<long>(cd);
  };
  for (auto const& t : compose) set(lookup(t.c, "compose"), lookup(t.d, "compose"), lookup(t.cd, "compose"));
  for (std::size_t a = 0; a < n; ++a) {
    set(g.rng_[a], a, a);
    set(a, g.src_[a], a);
  }
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d) {
      if (g.src_[c] != g.rng_[d]) continue;
      long cd = g.compose_[c][d];
      if (cd < 0) fail("composition", "composable pair without a composite", {L[c], L[d]});
      if (g.src_[cd] != g.src_[d] || g.rng_[cd] != g.rng_[c])
        fail("composition", "composite has the wrong source or range", {L[c], L[d]});
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (g.src_[a] != g.rng_[b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (g.src_[b] != g.rng_[c]) continue;
        if (g.compose_[g.compose_[a][b]][c] != g.compose_[a][g.compose_[b][c]])
          fail("associativity", "(ab)c != a(bc)", {L[a], L[b], L[c]});
      }
    }
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t i = g.inv_[a];
    if (g.src_[i] != g.rng_[a] || g.rng_[i] != g.src_[a]) fail("inverse", "inverse has the wrong ends", {L[a]});
    if (static_cast<std::size_t>(g.compose_[i][a]) != g.src_[a] ||
        static_cast<std::size_t>(g.compose_[a][i]) != g.rng_[a])
      fail("inverse", "b^-1 b is not the source unit or b b^-1 is not the range unit", {L[a]});
  }
  return g;
}

std::size_t Groupoid::index(std::string const& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw ParseError("unknown arrow '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::size_t> Groupoid::compose(std::size_t c, std::size_t d) const {
  long v = compose_[c][d];
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

std::size_t Groupoid::unit_position(std::size_t u) const {
  if (unit_position_[u] < 0) throw std::invalid_argument("arrow is not a unit: " + labels_[u]);
  return static_cast<std::size_t>(unit_position_[u]);
}

std::vector<std::size_t> Groupoid::isotropy() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a)
    if (src_[a] == rng_[a]) out.push_back(a);
  return out;
}

std::vector<PointSet> Groupoid::orbits() const {
  std::vector<PointSet> out;
  PointSet done(units_.size());
  for (std::size_t i = 0; i < units_.size(); ++i) {
    if (done[i]) continue;
    PointSet orbit(units_.size());
    for (std::size_t a = 0; a < size(); ++a)
      if (src_[a] == units_[i]) orbit.set(unit_position(rng_[a]));
    done |= orbit;
    out.push_back(orbit);
  }
  return out;
}

Groupoid pair_groupoid(std::size_t n) {
  std::vector<std::string> arrows, src, rng, inv;
  std::vector<Groupoid::Composition> compose;
  auto name = [](std::size_t i, std::size_t j) { return fmt::format("({},{})", i, j); };
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      arrows.push_back(name(i, j));
      src.push_back(name(j, j));
      rng.push_back(name(i, i));
      inv.push_back(name(j, i));
      for (std::size_t k = 1; k <= n; ++k) compose.push_back({name(i, j), name(j, k), name(i, k)});
    }
  return Groupoid::create(arrows, src, rng, inv, compose);
}

Groupoid unit_groupoid(std::size_t n) {
  std::vector<std::string> arrows;
  for (std::size_t i = 1; i <= n; ++i) arrows.push_back(std::to_string(i));
  return Groupoid::create(arrows, arrows, arrows, arrows, {});
}

Groupoid cyclic_group_groupoid(std::size_t n) {
  auto name = [](std::size_t k) {
    if (k == 0) return std::string("1");
    if (k == 1) return std::string("g");
    return fmt::format("g^{}", k);
  };
  std::vector<std::string> arrows, src, rng, inv;
  std::vector<Groupoid::Composition> compose;
  for (std::size_t k = 0; k < n; ++k) {
    arrows.push_back(name(k));
    src.push_back("1");
    rng.push_back("1");
    inv.push_back(name((n - k) % n));
    for (std::size_t l = 0; l < n; ++l) compose.push_back({name(k), name(l), name((k + l) % n)});
  }
  return Groupoid::create(arrows, src, rng, inv, compose);
}

// ---- A_R(G) -----------------------------------------------------------------

SteinbergFun zero_fun(Groupoid const& g, Carrier c) { return {c, std::vector<Scalar>(g.size(), Scalar::zero(c))}; }

SteinbergFun arrow_indicator(Groupoid const& g, Carrier c, ArrowSet const& set) {
  auto f = zero_fun(g, c);
  for (std::size_t a = 0; a < g.size(); ++a)
    if (set[a]) f.values[a] = Scalar::one(c);
  return f;
}

SteinbergFun convolve(Groupoid const& g, SteinbergFun const& f, SteinbergFun const& h) {
  if (!(f.carrier == h.carrier)) throw std::invalid_argument("mismatched carriers");
  if (f.values.size() != g.size() || h.values.size() != g.size())
    throw std::invalid_argument("function on a different groupoid");
  auto out = zero_fun(g, f.carrier);
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (f.values[c].is_zero()) continue;
    for (std::size_t d = 0; d < g.size(); ++d) {
      if (h.values[d].is_zero()) continue;
      if (auto cd = g.compose(c, d)) out.values[*cd] += f.values[c] * h.values[d];
    }
  }
  return out;
}

bool operator==(SteinbergFun const& a, SteinbergFun const& b) {
  return a.carrier == b.carrier && a.values == b.values;
}

bool is_bisection(Groupoid const& g, ArrowSet const& b) {
  std::vector<bool> s(g.size(), false), r(g.size(), false);
  for (auto a = b.find_first(); a != ArrowSet::npos; a = b.find_next(a)) {
    if (s[g.src(a)] || r[g.rng(a)]) return false;
    s[g.src(a)] = r[g.rng(a)] = true;
  }
  return true;
}

ArrowSet bisection_product(Groupoid const& g, ArrowSet const& b, ArrowSet const& c) {
  ArrowSet out(g.size());
  for (auto x = b.find_first(); x != ArrowSet::npos; x = b.find_next(x))
    for (auto y = c.find_first(); y != ArrowSet::npos; y = c.find_next(y))
      if (auto xy = g.compose(x, y)) out.set(*xy);
  return out;
}

ArrowSet bisection_inverse(Groupoid const& g, ArrowSet const& b) {
  ArrowSet out(g.size());
  for (auto x = b.find_first(); x != ArrowSet::npos; x = b.find_next(x)) out.set(g.inv(x));
  return out;
}

std::string format_arrows(Groupoid const& g, ArrowSet const& b) {
  std::string out = "{";
  for (auto x = b.find_first(); x != ArrowSet::npos; x = b.find_next(x)) {
    if (out.size() > 1) out += ",";
    out += g.label(x);
  }
  return out + "}";
}

namespace {

BisectionSemigroup build_semigroup(Groupoid const& g, std::vector<ArrowSet> sets, bool restricted) {
  std::sort(sets.begin(), sets.end(), [](ArrowSet const& a, ArrowSet const& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  });
  std::map<ArrowSet, std::size_t> index;
  for (std::size_t i = 0; i < sets.size(); ++i) index[sets[i]] = i;
  std::vector<std::vector<std::size_t>> table(sets.size(), std::vector<std::size_t>(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) table[i][j] = index.at(bisection_product(g, sets[i], sets[j]));
  std::vector<std::string> labels;
  for (auto const& s : sets) labels.push_back(format_arrows(g, s));
  ArrowSet g0(g.size());
  for (auto u : g.units()) g0.set(u);
  auto S = InverseSemigroup::from_table(std::move(labels), std::move(table), index.at(g0),
                                        std::max(InverseSemigroup::default_cap, sets.size()));
  return {std::move(S), std::move(sets), restricted};
}

}  // namespace

BisectionSemigroup compact_bisections(Groupoid const& g, std::size_t cap) {
  if (g.size() > cap)
    throw CapExceeded(fmt::format("{} arrows exceeds the bisection enumeration cap of {}; give a generating family",
                                  g.size(), cap));
  std::vector<ArrowSet> all;
  ArrowSet cur(g.size());
  std::vector<bool> s(g.size(), false), r(g.size(), false);
  // depth-first over arrows, keeping source and range injective
  auto rec = [&](auto&& self, std::size_t a) -> void {
    if (a == g.size()) {
      all.push_back(cur);
      return;
    }
    self(self, a + 1);
    if (!s[g.src(a)] && !r[g.rng(a)]) {
      s[g.src(a)] = r[g.rng(a)] = true;
      cur.set(a);
      self(self, a + 1);
      cur.reset(a);
      s[g.src(a)] = r[g.rng(a)] = false;
    }
  };
  rec(rec, 0);
  return build_semigroup(g, std::move(all), false);
}

BisectionSemigroup generated_bisections(Groupoid const& g, std::vector<ArrowSet> const& family) {
  std::vector<ArrowSet> sets;
  std::map<ArrowSet, bool> seen;
  auto add = [&](ArrowSet const& b) {
    if (!is_bisection(g, b)) throw std::invalid_argument("not a bisection: " + format_arrows(g, b));
    if (seen.emplace(b, true).second) sets.push_back(b);
  };
  ArrowSet g0(g.size());
  for (auto u : g.units()) g0.set(u);
  add(g0);
  for (auto const& b : family) {
    add(b);
    add(bisection_inverse(g, b));
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(bisection_product(g, sets[i], sets[j]));
      add(bisection_product(g, sets[j], sets[i]));
    }
  return build_semigroup(g, std::move(sets), true);
}

PartialAction theta_of_bisections(Groupoid const& g, BisectionSemigroup const& ga) {
  Space x = Space::finite(g.units().size());
  ActionData d;
  for (auto const& b : ga.bisections) {
    PointSet dom = x.empty();
    std::vector<long> m(x.size(), -1);
    for (auto a = b.find_first(); a != ArrowSet::npos; a = b.find_next(a)) {
      dom.set(g.unit_position(g.rng(a)));
      m[g.unit_position(g.src(a))] = static_cast<long>(g.unit_position(g.rng(a)));
    }
    d.domains.push_back(dom);
    d.maps.push_back(std::move(m));
  }
  return PartialAction(ga.semigroup, x, std::move(d));
}

std::vector<std::pair<ArrowSet, Scalar>> bisection_decomposition(Groupoid const& g, SteinbergFun const& f) {
  std::vector<std::pair<ArrowSet, Scalar>> out;
  ArrowSet left(g.size());
  for (std::size_t a = 0; a < g.size(); ++a)
    if (!f.values[a].is_zero()) left.set(a);
  while (left.any()) {
    std::size_t first = left.find_first();
    Scalar const v = f.values[first];
    ArrowSet b(g.size());
    b.set(first);
    for (auto a = left.find_next(first); a != ArrowSet::npos; a = left.find_next(a)) {
      if (!(f.values[a] == v)) continue;
      b.set(a);
      if (!is_bisection(g, b)) b.reset(a);
    }
    left -= b;
    out.emplace_back(b, v);
  }
  return out;
}

SteinbergIso::SteinbergIso(Groupoid const& g, BisectionSemigroup const& ga, SkewRing const& ring)
    : g_(&g), ga_(&ga), ring_(&ring) {
  for (auto const& sl : ring.slices()) {
    // atoms of a finite space are single points = unit positions
    std::size_t u = g.units()[sl.atom];
    std::optional<std::size_t> arrow;
    auto const& b = ga.bisections[sl.s];
    for (auto a = b.find_first(); a != ArrowSet::npos; a = b.find_next(a))
      if (g.rng(a) == u) arrow = a;
    slice_arrow_.push_back(arrow);
  }
}

SteinbergFun SteinbergIso::psi_L(Vector const& v) const {
  auto out = zero_fun(*g_, ring_->carrier());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    out.values[slice_arrow_[i].value()] += v[i];
  }
  return out;
}

SteinbergFun SteinbergIso::psi(SkewElement const& x) const { return psi_L(ring_->to_L(x)); }

SkewElement SteinbergIso::phi(SteinbergFun const& f) const {
  auto const& S = ga_->semigroup;
  auto const& x = ring_->space();
  SkewElement out;
  for (auto const& [b, value] : bisection_decomposition(*g_, f)) {
    PointSet range = x.empty();
    for (auto a = b.find_first(); a != ArrowSet::npos; a = b.find_next(a)) range.set(g_->unit_position(g_->rng(a)));
    std::size_t s = S.index(format_arrows(*g_, b));
    out += ring_->term(s, LcFun::indicator(x, f.carrier, range, value));
  }
  return out;
}

GroupoidProperties groupoid_properties(Groupoid const& g) {
  GroupoidProperties p{true, std::nullopt, true, std::nullopt};
  for (auto a : g.isotropy())
    if (!g.is_unit(a)) {
      p.effective = false;
      p.non_effective_witness = a;
      break;
    }
  for (auto const& orbit : g.orbits())
    if (orbit.count() != g.units().size()) {
      p.minimal = false;
      p.non_minimal_witness = orbit;
      break;
    }
  return p;
}

std::optional<ScalarIdealWitness> scalar_ideal_witness(Groupoid const& g, Carrier c) {
  if (c.is_field() || c.kind() != Carrier::Kind::modular) return std::nullopt;
  std::int64_t p = 2;
  while (c.modulus() % p != 0) ++p;
  Scalar const ps(c, p);
  auto multiple = [&](Scalar const& v) { return v.numerator() % p == 0; };
  ScalarIdealWitness w{p, !ps.is_zero(), true, true};
  // generators p*1_a; products with every 1_b on both sides stay in p*A_R
  for (std::size_t a = 0; a < g.size(); ++a) {
    ArrowSet sa(g.size());
    sa.set(a);
    auto gen = arrow_indicator(g, c, sa);
    for (auto& v : gen.values) v *= ps;
    for (std::size_t b = 0; b < g.size(); ++b) {
      ArrowSet sb(g.size());
      sb.set(b);
      auto ib = arrow_indicator(g, c, sb);
      for (auto const& prod : {convolve(g, gen, ib), convolve(g, ib, gen)})
        for (auto const& v : prod.values)
          if (!multiple(v)) w.two_sided = false;
    }
  }
  // the identity 1_{G0} has value 1 on units, not a multiple of p
  ArrowSet g0(g.size());
  for (auto u : g.units()) g0.set(u);
  w.proper = false;
  for (auto const& v : arrow_indicator(g, c, g0).values)
    if (!multiple(v)) w.proper = true;
  return w;
}

}  // namespace skewring
