#include "skewring/space.hpp"

#include <map>
#include <stdexcept>

#include <fmt/format.h>

namespace skewring {

Space::Space(Kind k, std::size_t points, std::size_t window) : kind_(k), points_(points), window_(window) {
  for (std::size_t p = 0; p < points_; ++p) {
    if (kind_ == Kind::omega_plus && p == infinity()) {
      atoms_.back().set(p);
      atom_of_.push_back(atoms_.size() - 1);
      continue;
    }
    atoms_.push_back(singleton(p));
    atom_of_.push_back(atoms_.size() - 1);
  }
}

Space Space::finite(std::size_t n) {
  if (n == 0) throw std::invalid_argument("finite space needs at least one point");
  return Space(Kind::finite, n, 0);
}

Space Space::omega_plus(std::size_t window) {
  if (window == 0) throw std::invalid_argument("omega_plus window must be positive");
  return Space(Kind::omega_plus, window + 2, window);
}

std::string Space::point_name(std::size_t p) const {
  if (kind_ == Kind::omega_plus) {
    if (p == tail()) return "tail";
    if (p == infinity()) return "inf";
  }
  return std::to_string(p + 1);
}

PointSet Space::singleton(std::size_t p) const {
  PointSet s(points_);
  s.set(p);
  return s;
}

bool Space::is_open(PointSet const& u) const {
  if (kind_ == Kind::finite) return true;
  return !u[infinity()] || u[tail()];
}

bool Space::is_compact_open(PointSet const& u) const {
  if (kind_ == Kind::finite) return true;
  return u[infinity()] == u[tail()];
}

PointSet Space::closure(PointSet const& t) const {
  PointSet c = t;
  if (kind_ == Kind::omega_plus && t[tail()]) c.set(infinity());
  return c;
}

PointSet Space::interior(PointSet const& t) const {
  PointSet i = t;
  if (kind_ == Kind::omega_plus && !t[tail()]) i.reset(infinity());
  return i;
}

PointSet Space::open_hull(PointSet const& t) const {
  PointSet h = t;
  if (kind_ == Kind::omega_plus && t[infinity()]) h.set(tail());
  return h;
}

std::size_t Space::reference_point(std::size_t atom) const {
  if (kind_ == Kind::omega_plus && atom == atoms_.size() - 1) return infinity();
  return atoms_[atom].find_first();
}

std::vector<PointSet> atoms(Space const& x, std::vector<PointSet> const& sets) {
  std::map<std::vector<bool>, PointSet> by_signature;
  std::vector<std::vector<bool>> order;
  for (std::size_t p = 0; p < x.size(); ++p) {
    std::vector<bool> sig;
    sig.reserve(sets.size());
    for (auto const& s : sets) sig.push_back(s[p]);
    auto [it, fresh] = by_signature.try_emplace(sig, x.empty());
    if (fresh) order.push_back(sig);
    it->second.set(p);
  }
  std::vector<PointSet> out;
  for (auto const& sig : order) out.push_back(by_signature.at(sig));
  return out;
}

std::vector<std::size_t> members(PointSet const& s) {
  std::vector<std::size_t> out;
  for (auto p = s.find_first(); p != PointSet::npos; p = s.find_next(p)) out.push_back(p);
  return out;
}

std::string format_set(Space const& x, PointSet const& s) {
  std::string out = "{";
  bool first = true;
  for (auto p : members(s)) {
    if (!first) out += ",";
    out += x.point_name(p);
    first = false;
  }
  return out + "}";
}

LcFun::LcFun(Space space, Carrier carrier)
    : space_(std::move(space)), carrier_(carrier), values_(space_.size(), Scalar::zero(carrier)) {}

LcFun::LcFun(Space space, std::vector<Scalar> values)
    : space_(std::move(space)), carrier_(values.at(0).carrier()), values_(std::move(values)) {
  if (values_.size() != space_.size()) throw std::invalid_argument("function has wrong number of point values");
  for (auto const& v : values_)
    if (!(v.carrier() == carrier_)) throw std::invalid_argument("mismatched carriers in function values");
  if (space_.is_omega() && !(values_[space_.tail()] == values_[space_.infinity()]))
    throw std::invalid_argument("function is not locally constant at inf (tail and inf values differ)");
}

LcFun LcFun::indicator(Space const& space, Carrier c, PointSet const& set) {
  return indicator(space, c, set, Scalar::one(c));
}

LcFun LcFun::indicator(Space const& space, Carrier c, PointSet const& set, Scalar value) {
  if (!space.is_compact_open(set))
    throw std::invalid_argument("indicator of a set that is not compact-open: " + format_set(space, set));
  LcFun f(space, c);
  for (auto p : members(set)) f.values_[p] = value;
  return f;
}

PointSet LcFun::support() const {
  PointSet s = space_.empty();
  for (std::size_t p = 0; p < values_.size(); ++p)
    if (!values_[p].is_zero()) s.set(p);
  return s;
}

bool LcFun::is_zero() const { return skewring::is_zero(values_); }

std::vector<std::pair<PointSet, Scalar>> LcFun::pieces() const {
  std::vector<std::pair<PointSet, Scalar>> out;
  for (std::size_t p = 0; p < values_.size(); ++p) {
    if (values_[p].is_zero()) continue;
    bool placed = false;
    for (auto& [set, v] : out)
      if (v == values_[p]) {
        set.set(p);
        placed = true;
        break;
      }
    if (!placed) out.emplace_back(space_.singleton(p), values_[p]);
  }
  return out;
}

void LcFun::check_same(LcFun const& o) const {
  if (!(space_ == o.space_)) throw std::invalid_argument("functions on different spaces");
  if (!(carrier_ == o.carrier_))
    throw std::invalid_argument("mismatched carriers: " + carrier_.name() + " vs " + o.carrier_.name());
}

LcFun& LcFun::operator+=(LcFun const& o) {
  check_same(o);
  for (std::size_t p = 0; p < values_.size(); ++p) values_[p] += o.values_[p];
  return *this;
}

LcFun& LcFun::operator-=(LcFun const& o) {
  check_same(o);
  for (std::size_t p = 0; p < values_.size(); ++p) values_[p] -= o.values_[p];
  return *this;
}

LcFun& LcFun::operator*=(LcFun const& o) {
  check_same(o);
  for (std::size_t p = 0; p < values_.size(); ++p) values_[p] *= o.values_[p];
  return *this;
}

LcFun& LcFun::operator*=(Scalar const& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

std::string LcFun::to_string() const {
  auto ps = pieces();
  if (ps.empty()) return "0";
  std::string out;
  for (auto const& [set, v] : ps) {
    if (!out.empty()) out += " + ";
    out += fmt::format("{}*1_{}", v.to_string(), format_set(space_, set));
  }
  return out;
}

Vector atom_coordinates(LcFun const& f) {
  auto const& x = f.space();
  Vector v;
  for (std::size_t a = 0; a < x.atoms().size(); ++a) v.push_back(f.at(x.atoms()[a].find_first()));
  return v;
}

LcFun from_atom_coordinates(Space const& x, Carrier c, Vector const& v) {
  std::vector<Scalar> values(x.size(), Scalar::zero(c));
  for (std::size_t p = 0; p < x.size(); ++p) values[p] = v.at(x.atom_of(p));
  return LcFun(x, std::move(values));
}

std::vector<LcFun> ideal_of_open(Space const& x, Carrier c, PointSet const& u) {
  if (!c.is_field()) throw std::domain_error("ideal/open correspondence needs a field carrier");
  if (!x.is_open(u)) throw std::invalid_argument("set is not open: " + format_set(x, u));
  std::vector<LcFun> out;
  for (auto const& a : x.atoms())
    if (a.is_subset_of(u)) out.push_back(LcFun::indicator(x, c, a));
  return out;
}

std::vector<LcFun> vanishing_ideal(Space const& x, Carrier c, PointSet const& t) {
  if (!c.is_field()) throw std::domain_error("ideal/open correspondence needs a field carrier");
  std::vector<LcFun> out;
  for (auto const& a : x.atoms())
    if (!a.intersects(t)) out.push_back(LcFun::indicator(x, c, a));
  return out;
}

IdealInLc ideal_closure(Space const& x, Carrier c, std::vector<LcFun> const& generators) {
  if (!c.is_field()) throw std::domain_error("ideal/open correspondence needs a field carrier");
  std::size_t const n = x.atoms().size();
  IdealInLc out{EchelonBasis(c, n), x.empty()};
  std::vector<Vector> queue;
  for (auto const& g : generators) {
    auto v = atom_coordinates(g);
    if (out.basis.insert(v)) queue.push_back(v);
  }
  // multiplying by an atom indicator keeps one coordinate
  while (!queue.empty()) {
    Vector v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t a = 0; a < n; ++a) {
      if (v[a].is_zero()) continue;
      Vector w = zero_vector(c, n);
      w[a] = v[a];
      if (out.basis.insert(w)) queue.push_back(w);
    }
  }
  for (auto const& row : out.basis.rows())
    for (std::size_t a = 0; a < n; ++a)
      if (!row[a].is_zero()) out.support |= x.atoms()[a];
  return out;
}

}  // namespace skewring
