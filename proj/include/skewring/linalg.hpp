#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skewring/scalar.hpp"

namespace skewring {

using Vector = std::vector<Scalar>;

Vector zero_vector(Carrier c, std::size_t dim);
Vector unit_vector(Carrier c, std::size_t dim, std::size_t i);
bool is_zero(Vector const& v);
void axpy(Vector& y, Scalar const& a, Vector const& x);  // y += a*x

/// Which nonzero coordinate of a row becomes its pivot.
enum class PivotOrder { lowest, highest };

/// Reduced row-echelon basis of a subspace of carrier^dim, grown one vector at
/// a time. Every row has a pivot coordinate equal to one and every other row is
/// zero there, so reduction is a single pass over the rows.
///
/// Requires a field carrier.
class EchelonBasis {
 public:
  EchelonBasis(Carrier carrier, std::size_t dim, PivotOrder order = PivotOrder::lowest);

  /// Adds v to the span. Returns false (and changes nothing) when v is already in it.
  bool insert(Vector v);
  Vector reduce(Vector v) const;
  bool contains(Vector const& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  Carrier const& carrier() const { return carrier_; }
  std::vector<Vector> const& rows() const { return rows_; }
  std::vector<std::size_t> const& pivots() const { return pivots_; }
  bool is_pivot(std::size_t column) const { return pivot_row_[column] >= 0; }
  /// Columns without a pivot, ascending.
  std::vector<std::size_t> free_columns() const;

 private:
  std::optional<std::size_t> pick_pivot(Vector const& v) const;

  Carrier carrier_;
  std::size_t dim_;
  PivotOrder order_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;
};

/// Basis of {x : M x = 0} where M is given by its rows (each of length dim).
std::vector<Vector> nullspace(Carrier c, std::size_t dim, std::vector<Vector> const& rows);

/// dim(U ∩ V) via dim U + dim V - dim(U + V).
std::size_t intersection_dim(EchelonBasis const& u, EchelonBasis const& v);

}  // namespace skewring
