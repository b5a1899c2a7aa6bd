#include "skewring/action.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "skewring/diagnostic.hpp"

namespace skewring {

namespace {

[[noreturn]] void fail(std::string axiom, std::string message, std::vector<std::string> witness) {
  throw ValidationError(Diagnostic{std::move(axiom), std::move(message), std::move(witness)});
}

}  // namespace

PartialAction::PartialAction(InverseSemigroup s, Space x, ActionData data)
    : s_(std::move(s)), x_(std::move(x)), domains_(std::move(data.domains)), maps_(std::move(data.maps)) {
  validate();
}

std::size_t PartialAction::theta(std::size_t s, std::size_t p) const {
  long v = maps_[s][p];
  if (v < 0)
    throw std::out_of_range(fmt::format("theta_{} undefined at {}", s_.label(s), x_.point_name(p)));
  return static_cast<std::size_t>(v);
}

PointSet PartialAction::image(std::size_t s, PointSet const& u) const {
  PointSet out = x_.empty();
  for (auto p : members(u & domains_[s_.star(s)])) out.set(theta(s, p));
  return out;
}

void PartialAction::validate() {
  auto const n = s_.size();
  auto const& S = s_;
  auto const& X = x_;
  auto lab = [&](std::size_t s) { return S.label(s); };
  auto pt = [&](std::size_t p) { return X.point_name(p); };

  if (domains_.size() != n || maps_.size() != n) fail("shape", "domains and maps must be given for every element", {});
  for (std::size_t s = 0; s < n; ++s) {
    if (domains_[s].size() != X.size() || maps_[s].size() != X.size())
      fail("shape", "domain or map has the wrong number of points", {lab(s)});
    if (!X.is_open(domains_[s])) fail("open domain", "X_s is not open (contains inf but not the tail)", {lab(s)});
  }

  for (std::size_t s = 0; s < n; ++s) {
    auto const& src = domains_[S.star(s)];
    PointSet seen = X.empty();
    for (std::size_t p = 0; p < X.size(); ++p) {
      long v = maps_[s][p];
      if (src[p] != (v >= 0)) fail("map domain", "theta_s must be defined exactly on X_{s*}", {lab(s), pt(p)});
      if (v < 0) continue;
      if (static_cast<std::size_t>(v) >= X.size()) fail("map domain", "theta_s value out of range", {lab(s), pt(p)});
      if (seen[v]) fail("bijection", "theta_s is not injective", {lab(s), pt(p)});
      seen.set(v);
      if (X.is_omega()) {
        bool symbolic = p == X.tail() || p == X.infinity();
        if (symbolic && static_cast<std::size_t>(v) != p)
          fail("tail behaviour", "theta_s must fix the tail and inf (identity beyond the window)", {lab(s), pt(p)});
        if (!symbolic && static_cast<std::size_t>(v) >= X.window())
          fail("tail behaviour", "theta_s sends a window point outside the window", {lab(s), pt(p)});
      }
    }
    if (seen != domains_[s]) fail("bijection", "theta_s does not map X_{s*} onto X_s", {lab(s)});
  }

  // (i) cover
  PointSet cover = X.empty();
  for (auto e : S.idempotents()) cover |= domains_[e];
  if (cover != X.full()) {
    auto missing = (~cover).find_first();
    fail("cover", "X is not the union of the X_e over idempotents", {pt(missing)});
  }

  // (ii) theta_s(X_{s*} n X_t) = X_s n X_{st}
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      PointSet lhs = image(s, domains_[t]);
      PointSet rhs = domains_[s] & domains_[S.mul(s, t)];
      if (lhs != rhs) {
        auto p = (lhs ^ rhs).find_first();
        fail("domain compatibility", "theta_s(X_{s*} n X_t) != X_s n X_{st}", {lab(s), lab(t), pt(p)});
      }
    }

  // (iii) theta_s theta_t = theta_{st} on X_{t*} n X_{t*s*}
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t st = S.mul(s, t);
      PointSet where = domains_[S.star(t)] & domains_[S.mul(S.star(t), S.star(s))];
      for (auto p : members(where)) {
        std::size_t q = theta(t, p);
        if (!defined(s, q) || !defined(st, p) || theta(s, q) != theta(st, p))
          fail("composition", "theta_s(theta_t(x)) != theta_st(x)", {lab(s), lab(t), pt(p)});
      }
    }

  // consequences
  for (std::size_t s = 0; s < n; ++s) {
    if (!domains_[s].is_subset_of(domains_[S.mul(s, S.star(s))]))
      fail("consequence: X_s inside X_{ss*}", "X_s not contained in X_{ss*}", {lab(s)});
    if (S.is_idempotent(s))
      for (auto p : members(domains_[s]))
        if (theta(s, p) != p) fail("consequence: idempotents act trivially", "theta_e(x) != x", {lab(s), pt(p)});
    for (auto p : members(domains_[S.star(s)]))
      if (theta(S.star(s), theta(s, p)) != p)
        fail("consequence: theta_{s*} inverts theta_s", "theta_{s*}(theta_s(x)) != x", {lab(s), pt(p)});
    for (std::size_t t = 0; t < n; ++t) {
      if (!S.leq(s, t)) continue;
      if (!domains_[s].is_subset_of(domains_[t]))
        fail("consequence: monotone domains", "s <= t but X_s not inside X_t", {lab(s), lab(t)});
      for (auto p : members(domains_[S.star(s)]))
        if (theta(s, p) != theta(t, p))
          fail("consequence: restriction", "s <= t but theta_s != theta_t on X_{s*}", {lab(s), lab(t), pt(p)});
    }
  }
  if (auto one = S.unit()) {
    if (domains_[*one] != X.full()) fail("consequence: unit", "X_1 != X", {lab(*one)});
    for (std::size_t p = 0; p < X.size(); ++p)
      if (theta(*one, p) != p) fail("consequence: unit", "theta_1 is not the identity", {lab(*one), pt(p)});
  }

  for (std::size_t a = 0; a < X.atoms().size(); ++a) {
    for (auto e : S.idempotents())
      if (X.atoms()[a].is_subset_of(domains_[e])) {
        atom_cover_.push_back(e);
        break;
      }
    if (atom_cover_.size() != a + 1)
      fail("cover", "compact-open atom not inside any X_e", {format_set(X, X.atoms()[a])});
  }
}

LcFun PartialAction::alpha(std::size_t s, LcFun const& f) const {
  std::size_t const ss = s_.star(s);
  if (!in_ideal(ss, f)) throw std::invalid_argument("alpha_s applied to a function outside D_{s*}");
  std::vector<Scalar> values(x_.size(), Scalar::zero(f.carrier()));
  for (auto p : members(domains_[s])) values[p] = f.at(theta(ss, p));
  return LcFun(x_, std::move(values));
}

std::vector<std::pair<std::size_t, LcFun>> PartialAction::nondegenerate_decomposition(LcFun const& f) const {
  std::vector<std::pair<std::size_t, LcFun>> out;
  auto const& atoms = x_.atoms();
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    auto const& v = f.at(atoms[a].find_first());
    if (v.is_zero()) continue;
    std::size_t e = atom_cover_[a];
    LcFun piece = LcFun::indicator(x_, f.carrier(), atoms[a], v);
    bool merged = false;
    for (auto& [e2, g] : out)
      if (e2 == e) {
        g += piece;
        merged = true;
      }
    if (!merged) out.emplace_back(e, std::move(piece));
  }
  return out;
}

PartialAction munn_action(InverseSemigroup const& s) {
  auto const& E = s.idempotents();
  Space x = Space::finite(E.size());
  std::vector<long> point_of(s.size(), -1);
  for (std::size_t i = 0; i < E.size(); ++i) point_of[E[i]] = static_cast<long>(i);
  ActionData d;
  for (std::size_t a = 0; a < s.size(); ++a) {
    std::size_t const aa = s.mul(a, s.star(a));
    PointSet dom = x.empty();
    for (std::size_t i = 0; i < E.size(); ++i)
      if (s.leq(E[i], aa)) dom.set(i);
    d.domains.push_back(dom);
  }
  for (std::size_t a = 0; a < s.size(); ++a) {
    std::vector<long> m(x.size(), -1);
    for (auto i : members(d.domains[s.star(a)]))
      m[i] = point_of[s.mul(s.mul(a, E[i]), s.star(a))];
    d.maps.push_back(std::move(m));
  }
  return PartialAction(s, x, std::move(d));
}

PartialAction identity_action(InverseSemigroup s, Space x, std::vector<PointSet> domains) {
  ActionData d;
  for (auto const& dom : domains) {
    std::vector<long> m(x.size(), -1);
    for (auto p : members(dom)) m[p] = static_cast<long>(p);
    d.maps.push_back(std::move(m));
  }
  d.domains = std::move(domains);
  return PartialAction(std::move(s), std::move(x), std::move(d));
}

PartialAction snake_action(std::size_t window) {
  auto s = snake_semigroup_with_tail(window);
  auto x = Space::omega_plus(window);
  std::vector<PointSet> domains;
  for (std::size_t k = 0; k < window; ++k) {
    PointSet d = x.empty();
    for (std::size_t p = 0; p <= k; ++p) d.set(p);
    domains.push_back(d);
  }
  PointSet naturals = x.full();
  naturals.reset(x.infinity());
  domains.push_back(naturals);
  domains.push_back(x.full());
  domains.push_back(x.full());
  return identity_action(std::move(s), std::move(x), std::move(domains));
}

// ---- dynamics ----------------------------------------------------------------

bool is_invariant(PartialAction const& a, PointSet const& u) {
  for (std::size_t s = 0; s < a.semigroup().size(); ++s)
    if (!a.image(s, u).is_subset_of(u)) return false;
  return true;
}

PointSet invariant_open_hull(PartialAction const& a, PointSet const& u) {
  PointSet cur = a.space().open_hull(u);
  for (;;) {
    PointSet next = cur;
    for (std::size_t s = 0; s < a.semigroup().size(); ++s) next |= a.image(s, cur);
    next = a.space().open_hull(next);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::vector<PointSet> orbits(PartialAction const& a) {
  auto const& x = a.space();
  std::vector<PointSet> out;
  PointSet done = x.empty();
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (done[p]) continue;
    PointSet orbit = x.empty();
    for (std::size_t s = 0; s < a.semigroup().size(); ++s)
      if (a.defined(s, p)) orbit.set(a.theta(s, p));
    done |= orbit;
    out.push_back(orbit);
  }
  return out;
}

MinimalityResult is_minimal(PartialAction const& a, std::size_t enumeration_cap) {
  auto const& x = a.space();
  MinimalityResult r{true, std::nullopt, false, true};
  for (std::size_t p = 0; p < x.size() && r.minimal; ++p) {
    PointSet hull = invariant_open_hull(a, x.singleton(p));
    if (hull != x.full()) {
      r.minimal = false;
      r.witness = hull;
    }
  }
  if (x.size() <= enumeration_cap) {
    r.enumerated = true;
    bool found = false;
    unsigned long const total = 1UL << x.size();
    for (unsigned long mask = 1; mask + 1 < total && !found; ++mask) {
      PointSet u(x.size(), mask);
      if (x.is_open(u) && is_invariant(a, u)) found = true;
    }
    r.agrees = found == !r.minimal;
  }
  return r;
}

PointSet fixed_set(PartialAction const& a, std::size_t s) {
  PointSet f = a.space().empty();
  for (auto p : members(a.domain(a.semigroup().star(s))))
    if (a.theta(s, p) == p) f.set(p);
  return f;
}

PointSet idempotent_witnessed(PartialAction const& a, std::size_t s) {
  auto const& S = a.semigroup();
  PointSet w = a.space().empty();
  for (auto e : S.below(s))
    if (S.is_idempotent(e)) w |= a.domain(e);
  return w & a.domain(S.star(s));
}

PrincipalityResult is_topologically_principal(PartialAction const& a) {
  auto const& S = a.semigroup();
  auto const& x = a.space();
  PrincipalityResult r{true, {}, x.empty(), false};
  for (std::size_t s = 0; s < S.size(); ++s) {
    PointSet const& src = a.domain(S.star(s));
    PointSet lambda = (src & ~fixed_set(a, s)) | idempotent_witnessed(a, s);
    bool dense = x.is_dense_in(lambda, src);
    r.principal = r.principal && dense;
    r.certificates.push_back({s, lambda, dense});
  }
  PointSet global = x.full();
  for (std::size_t s = 0; s < S.size(); ++s) {
    PointSet bad = fixed_set(a, s) & ~idempotent_witnessed(a, s);
    global &= ~bad;
  }
  r.global_lambda = global;
  r.global_dense = x.is_dense_in(global, x.full());
  return r;
}

FreenessResult is_topologically_free(PartialAction const& a) {
  auto const& S = a.semigroup();
  auto const& x = a.space();
  for (std::size_t s = 0; s < S.size(); ++s) {
    PointSet lhs = x.interior(fixed_set(a, s));
    PointSet rhs = idempotent_witnessed(a, s);
    if (lhs != rhs) return {false, s, (lhs ^ rhs).find_first()};
  }
  return {true, std::nullopt, std::nullopt};
}

PointSet group_fixed(PartialAction const& a, std::size_t t) { return fixed_set(a, t); }

PointSet group_lambda(PartialAction const& a, std::size_t t) {
  return a.domain(a.semigroup().star(t)) & ~fixed_set(a, t);
}

bool is_group_topologically_free(PartialAction const& a) {
  auto const& S = a.semigroup();
  if (!S.is_group()) throw std::invalid_argument("group freeness asked of a semigroup that is not a group");
  std::size_t const one = S.idempotents().front();
  for (std::size_t t = 0; t < S.size(); ++t)
    if (t != one && a.space().interior(group_fixed(a, t)).any()) return false;
  return true;
}

}  // namespace skewring
