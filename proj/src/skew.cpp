#include "skewring/skew.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace skewring {

// ---- SkewElement ---------------------------------------------------------------

SkewElement::SkewElement(std::vector<SkewTerm> terms) {
  for (auto const& t : terms) add(t, false);
}

void SkewElement::add(SkewTerm const& t, bool negate) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t.s, [](SkewTerm const& a, std::size_t s) { return a.s < s; });
  if (it != terms_.end() && it->s == t.s) {
    if (negate)
      it->coeff -= t.coeff;
    else
      it->coeff += t.coeff;
    if (it->coeff.is_zero()) terms_.erase(it);
    return;
  }
  if (t.coeff.is_zero()) return;
  SkewTerm copy = t;
  if (negate) copy.coeff *= -Scalar::one(t.coeff.carrier());
  terms_.insert(it, std::move(copy));
}

SkewElement& SkewElement::operator+=(SkewElement const& o) {
  for (auto const& t : o.terms_) add(t, false);
  return *this;
}

SkewElement& SkewElement::operator-=(SkewElement const& o) {
  for (auto const& t : o.terms_) add(t, true);
  return *this;
}

bool operator==(SkewElement const& a, SkewElement const& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].s != b.terms_[i].s || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

// ---- SkewRing ------------------------------------------------------------------

SkewRing::SkewRing(PartialAction action, Carrier carrier) : action_(std::move(action)), carrier_(carrier) {
  auto const& S = semigroup();
  auto const& X = space();
  auto const& atoms = X.atoms();

  slice_at_.assign(S.size(), std::vector<long>(atoms.size(), -1));
  for (std::size_t s = 0; s < S.size(); ++s)
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (atoms[a].is_subset_of(action_.domain(s))) {
        slice_at_[s][a] = static_cast<long>(slices_.size());
        slices_.push_back({s, a});
      }

  // products of slices through the general rule; each is a slice or zero
  std::vector<SkewElement> as_elements;
  for (auto const& sl : slices_) as_elements.push_back(term(sl.s, LcFun::indicator(X, carrier_, atoms[sl.atom])));
  slice_mul_.assign(slices_.size(), std::vector<long>(slices_.size(), -1));
  for (std::size_t i = 0; i < slices_.size(); ++i)
    for (std::size_t j = 0; j < slices_.size(); ++j) {
      SkewElement p = multiply(as_elements[i], as_elements[j]);
      if (p.is_zero()) continue;
      Vector v = to_L(p);
      std::size_t nonzero = 0;
      long where = -1;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) {
          ++nonzero;
          where = static_cast<long>(k);
        }
      if (nonzero != 1 || !v[where].is_one())
        throw std::logic_error("product of two slices is not a slice");
      slice_mul_[i][j] = where;
    }

  for (std::size_t s = 0; s < S.size(); ++s)
    for (auto r : S.below(s)) {
      if (r == s) continue;
      for (std::size_t a = 0; a < atoms.size(); ++a) {
        if (slice_at_[r][a] < 0) continue;
        Vector g = zero_vector(carrier_, slices_.size());
        g[slice_at_[r][a]] = Scalar::one(carrier_);
        g[slice_at_[s][a]] = -Scalar::one(carrier_);
        n_generators_.push_back(std::move(g));
      }
    }

  // germ classes: s ~ t at p when some u <= s,t has p in X_u
  germ_rep_.assign(X.size(), std::vector<std::size_t>(S.size()));
  for (std::size_t p = 0; p < X.size(); ++p) {
    std::vector<std::size_t> parent(S.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t u = 0; u < S.size(); ++u) {
      if (!action_.domain(u)[p]) continue;
      for (std::size_t s = 0; s < S.size(); ++s)
        if (S.leq(u, s)) {
          auto a = find(u), b = find(s);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    for (std::size_t s = 0; s < S.size(); ++s) germ_rep_[p][s] = find(s);
  }

  if (carrier_.is_field()) build_quotient();
}

void SkewRing::require_field() const {
  if (!carrier_.is_field())
    throw std::domain_error("the quotient L/N is only computed over a field; " + carrier_.name() + " is not one");
}

SkewElement SkewRing::term(std::size_t s, LcFun a) const {
  if (!(a.carrier() == carrier_)) throw std::invalid_argument("coefficient over the wrong carrier");
  if (!action_.in_ideal(s, a))
    throw std::invalid_argument(fmt::format("coefficient of delta_{} is not supported inside X_{}",
                                            semigroup().label(s), semigroup().label(s)));
  return SkewElement({SkewTerm{s, std::move(a)}});
}

SkewElement SkewRing::multiply(SkewElement const& x, SkewElement const& y) const {
  auto const& S = semigroup();
  SkewElement out;
  for (auto const& [s, a] : x.terms())
    for (auto const& [t, b] : y.terms()) {
      LcFun inner = action_.alpha(S.star(s), a) * b;
      LcFun c = action_.alpha(s, inner);
      out += SkewElement({SkewTerm{S.mul(s, t), std::move(c)}});
    }
  return out;
}

LcFun SkewRing::tau(SkewElement const& x) const {
  LcFun out(space(), carrier_);
  for (auto const& t : x.terms()) out += t.coeff;
  return out;
}

std::optional<std::size_t> SkewRing::slice_index(std::size_t s, std::size_t atom) const {
  long i = slice_at_[s][atom];
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

Vector SkewRing::to_L(SkewElement const& x) const {
  auto const& X = space();
  Vector v = zero_vector(carrier_, slices_.size());
  for (auto const& [s, a] : x.terms())
    for (std::size_t k = 0; k < X.atoms().size(); ++k) {
      Scalar const& c = a.at(X.atoms()[k].find_first());
      if (c.is_zero()) continue;
      long i = slice_at_[s][k];
      if (i < 0) throw std::invalid_argument("coefficient not supported inside its domain");
      v[i] = c;
    }
  return v;
}

SkewElement SkewRing::from_L(Vector const& v) const {
  auto const& X = space();
  std::vector<SkewTerm> terms;
  for (std::size_t i = 0; i < slices_.size(); ++i) {
    if (v[i].is_zero()) continue;
    terms.push_back({slices_[i].s, LcFun::indicator(X, carrier_, X.atoms()[slices_[i].atom], v[i])});
  }
  return SkewElement(std::move(terms));
}

Vector SkewRing::mul_L(Vector const& a, Vector const& b) const {
  Vector out = zero_vector(carrier_, slices_.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      long k = slice_mul_[i][j];
      if (k >= 0) out[k] += a[i] * b[j];
    }
  }
  return out;
}

LcFun SkewRing::tau_L(Vector const& v) const {
  auto const& X = space();
  Vector coords = zero_vector(carrier_, X.atoms().size());
  for (std::size_t i = 0; i < slices_.size(); ++i)
    if (!v[i].is_zero()) coords[slices_[i].atom] += v[i];
  return from_atom_coordinates(X, carrier_, coords);
}

bool SkewRing::in_N(Vector const& v) const {
  require_field();
  return n_basis_->contains(v);
}

std::size_t SkewRing::germ_class(std::size_t p, std::size_t s) const {
  if (!action_.domain(s)[p]) throw std::invalid_argument("germ asked at a point outside the domain");
  return germ_rep_[p][s];
}

GermNormalForm SkewRing::germ_normal_form(Vector const& v) const {
  auto const& X = space();
  GermNormalForm g;
  for (std::size_t i = 0; i < slices_.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (auto p : members(X.atoms()[slices_[i].atom])) {
      auto key = std::make_pair(p, germ_rep_[p][slices_[i].s]);
      auto [it, fresh] = g.try_emplace(key, v[i]);
      if (!fresh) it->second += v[i];
    }
  }
  for (auto it = g.begin(); it != g.end();) {
    if (it->second.is_zero())
      it = g.erase(it);
    else
      ++it;
  }
  return g;
}

Vector SkewRing::reexpand(GermNormalForm const& g) const {
  auto const& X = space();
  Vector v = zero_vector(carrier_, slices_.size());
  for (auto const& [key, value] : g) {
    auto [p, rep] = key;
    std::size_t atom = X.atom_of(p);
    if (X.reference_point(atom) != p) continue;
    v[slice_at_[rep][atom]] += value;
  }
  return v;
}

void SkewRing::build_quotient() {
  n_basis_.emplace(carrier_, slices_.size(), PivotOrder::highest);
  for (auto const& g : n_generators_) n_basis_->insert(g);
  basis_slices_ = n_basis_->free_columns();
  quotient_index_.assign(slices_.size(), -1);
  for (std::size_t i = 0; i < basis_slices_.size(); ++i) quotient_index_[basis_slices_[i]] = static_cast<long>(i);

  std::size_t const d = basis_slices_.size();
  structure_.assign(d, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      long k = slice_mul_[basis_slices_[i]][basis_slices_[j]];
      if (k < 0) continue;
      Vector q = project(unit_vector(carrier_, slices_.size(), static_cast<std::size_t>(k)));
      for (std::size_t c = 0; c < d; ++c)
        if (!q[c].is_zero()) structure_[i][j].emplace_back(c, q[c]);
    }

  diagonal_.emplace(carrier_, d);
  auto const& S = semigroup();
  for (std::size_t i = 0; i < slices_.size(); ++i)
    if (S.is_idempotent(slices_[i].s)) diagonal_->insert(project(unit_vector(carrier_, slices_.size(), i)));
}

std::size_t SkewRing::dim() const {
  require_field();
  return basis_slices_.size();
}

std::size_t SkewRing::dim_N() const {
  require_field();
  return n_basis_->rank();
}

std::vector<std::size_t> const& SkewRing::basis_slices() const {
  require_field();
  return basis_slices_;
}

Vector SkewRing::project(Vector const& v) const {
  require_field();
  Vector r = n_basis_->reduce(v);
  Vector q;
  q.reserve(basis_slices_.size());
  for (auto i : basis_slices_) q.push_back(r[i]);
  return q;
}

Vector SkewRing::lift(Vector const& q) const {
  require_field();
  Vector v = zero_vector(carrier_, slices_.size());
  for (std::size_t i = 0; i < basis_slices_.size(); ++i) v[basis_slices_[i]] = q[i];
  return v;
}

Vector SkewRing::mul(Vector const& a, Vector const& b) const {
  require_field();
  std::size_t const d = basis_slices_.size();
  Vector out = zero_vector(carrier_, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      Scalar const ab = a[i] * b[j];
      for (auto const& [k, c] : structure_[i][j]) out[k] += ab * c;
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, Scalar>> const& SkewRing::structure(std::size_t i, std::size_t j) const {
  require_field();
  return structure_[i][j];
}

SkewElement SkewRing::phi(LcFun const& a) const {
  SkewElement out;
  for (auto& [e, piece] : action_.nondegenerate_decomposition(a)) out += term(e, piece);
  return out;
}

bool SkewRing::in_diagonal_germs(Vector const& v) const {
  auto const& S = semigroup();
  for (auto const& [key, value] : germ_normal_form(v)) {
    auto [p, rep] = key;
    bool has_idempotent = false;
    for (auto e : S.idempotents())
      if (action_.domain(e)[p] && germ_rep_[p][e] == rep) has_idempotent = true;
    if (!has_idempotent) return false;
  }
  return true;
}

bool SkewRing::in_diagonal_span(Vector const& v) const { return diagonal().contains(project(v)); }

EchelonBasis const& SkewRing::diagonal() const {
  require_field();
  return *diagonal_;
}

EchelonBasis SkewRing::ideal_generated_by(Vector const& q) const {
  require_field();
  std::size_t const d = basis_slices_.size();
  EchelonBasis ideal(carrier_, d);
  std::vector<Vector> queue;
  if (ideal.insert(q)) queue.push_back(q);
  while (!queue.empty() && ideal.rank() < d) {
    Vector v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < d; ++i) {
      Vector e = unit_vector(carrier_, d, i);
      for (auto w : {mul(e, v), mul(v, e)})
        if (ideal.insert(w)) queue.push_back(std::move(w));
    }
  }
  return ideal;
}

MaxCommutativeResult SkewRing::max_commutative() const {
  require_field();
  std::size_t const d = basis_slices_.size();
  auto const& D = diagonal();
  std::vector<Vector> rows;
  for (auto const& g : D.rows()) {
    std::vector<Vector> images;  // [x basis i] -> b_i g - g b_i
    for (std::size_t i = 0; i < d; ++i) {
      Vector e = unit_vector(carrier_, d, i);
      Vector c = mul(e, g);
      axpy(c, -Scalar::one(carrier_), mul(g, e));
      images.push_back(std::move(c));
    }
    for (std::size_t k = 0; k < d; ++k) {
      Vector row;
      for (std::size_t i = 0; i < d; ++i) row.push_back(images[i][k]);
      rows.push_back(std::move(row));
    }
  }
  auto centralizer = nullspace(carrier_, d, rows);
  MaxCommutativeResult r{centralizer.size() == D.rank(), D.rank(), centralizer.size(), std::nullopt};
  if (!r.maximal) {
    EchelonBasis c(carrier_, d);
    for (auto const& v : centralizer) c.insert(v);
    for (std::size_t i = 0; i < d && !r.witness; ++i) {
      Vector e = unit_vector(carrier_, d, i);
      if (c.contains(e) && !D.contains(e)) r.witness = e;
    }
    for (auto const& v : centralizer)
      if (!r.witness && !D.contains(v)) r.witness = v;
  }
  return r;
}

SSimpleResult SkewRing::s_simple() const {
  require_field();
  auto const& S = semigroup();
  auto const& X = space();
  auto const& atoms = X.atoms();
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    auto closure = ideal_closure(X, carrier_, {LcFun::indicator(X, carrier_, atoms[a])});
    std::vector<LcFun> queue;
    for (auto const& row : closure.basis.rows()) queue.push_back(from_atom_coordinates(X, carrier_, row));
    while (!queue.empty()) {
      LcFun f = std::move(queue.back());
      queue.pop_back();
      for (std::size_t s = 0; s < S.size(); ++s) {
        // f restricted to the compact-open part of X_{s*}
        LcFun cut(X, carrier_);
        for (std::size_t b = 0; b < atoms.size(); ++b)
          if (atoms[b].is_subset_of(action_.domain(S.star(s)))) cut += f * LcFun::indicator(X, carrier_, atoms[b]);
        if (cut.is_zero()) continue;
        LcFun g = action_.alpha(s, cut);
        auto grown = ideal_closure(X, carrier_, {g});
        for (auto const& row : grown.basis.rows())
          if (closure.basis.insert(row)) queue.push_back(from_atom_coordinates(X, carrier_, row));
      }
    }
    if (closure.basis.rank() < atoms.size()) {
      PointSet u = X.empty();
      for (auto const& row : closure.basis.rows())
        for (std::size_t b = 0; b < atoms.size(); ++b)
          if (!row[b].is_zero()) u |= atoms[b];
      return {false, u};
    }
  }
  return {true, std::nullopt};
}

}  // namespace skewring
