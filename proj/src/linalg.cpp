#include "skewring/linalg.hpp"

#include <stdexcept>

namespace skewring {

Vector zero_vector(Carrier c, std::size_t dim) { return Vector(dim, Scalar::zero(c)); }

Vector unit_vector(Carrier c, std::size_t dim, std::size_t i) {
  Vector v = zero_vector(c, dim);
  v.at(i) = Scalar::one(c);
  return v;
}

bool is_zero(Vector const& v) {
  for (auto const& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void axpy(Vector& y, Scalar const& a, Vector const& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

EchelonBasis::EchelonBasis(Carrier carrier, std::size_t dim, PivotOrder order)
    : carrier_(carrier), dim_(dim), order_(order), pivot_row_(dim, -1) {
  if (!carrier.is_field())
    throw std::domain_error("linear algebra over " + carrier.name() + ", which is not a field");
}

std::optional<std::size_t> EchelonBasis::pick_pivot(Vector const& v) const {
  if (order_ == PivotOrder::lowest) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return i;
  } else {
    for (std::size_t i = v.size(); i-- > 0;)
      if (!v[i].is_zero()) return i;
  }
  return std::nullopt;
}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length does not match subspace ambient dimension");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar const c = v[pivots_[r]];
    if (!c.is_zero()) axpy(v, -c, rows_[r]);
  }
  return v;
}

bool EchelonBasis::contains(Vector const& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(Vector v) {
  v = reduce(std::move(v));
  auto p = pick_pivot(v);
  if (!p) return false;
  Scalar const inv = v[*p].inverse();
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  for (auto& row : rows_) {
    Scalar const c = row[*p];
    if (!c.is_zero()) axpy(row, -c, v);
  }
  pivot_row_[*p] = static_cast<long>(rows_.size());
  pivots_.push_back(*p);
  rows_.push_back(std::move(v));
  return true;
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim_; ++i)
    if (pivot_row_[i] < 0) out.push_back(i);
  return out;
}

std::vector<Vector> nullspace(Carrier c, std::size_t dim, std::vector<Vector> const& rows) {
  EchelonBasis e(c, dim);
  for (auto const& r : rows) e.insert(r);
  std::vector<Vector> out;
  for (std::size_t f : e.free_columns()) {
    Vector x = unit_vector(c, dim, f);
    for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots()[r]] = -e.rows()[r][f];
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t intersection_dim(EchelonBasis const& u, EchelonBasis const& v) {
  EchelonBasis sum = u;
  for (auto const& row : v.rows()) sum.insert(row);
  return u.rank() + v.rank() - sum.rank();
}

}  // namespace skewring
