#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "skewring/action.hpp"
#include "skewring/linalg.hpp"

namespace skewring {

struct SkewTerm {
  std::size_t s;
  LcFun coeff;
};

/// Formal finite sum of a_s delta_s, one term per s, zero terms dropped,
/// ordered by s.
class SkewElement {
 public:
  SkewElement() = default;
  explicit SkewElement(std::vector<SkewTerm> terms);

  std::vector<SkewTerm> const& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SkewElement& operator+=(SkewElement const& o);
  SkewElement& operator-=(SkewElement const& o);
  friend SkewElement operator+(SkewElement a, SkewElement const& b) { return a += b; }
  friend SkewElement operator-(SkewElement a, SkewElement const& b) { return a -= b; }
  friend bool operator==(SkewElement const& a, SkewElement const& b);

 private:
  void add(SkewTerm const& t, bool negate);
  std::vector<SkewTerm> terms_;
};

/// 1_K delta_s with K an atom of the space inside X_s.
struct Slice {
  std::size_t s;
  std::size_t atom;
};

/// Germ normal form: (point, class representative) -> accumulated value,
/// nonzero entries only.
using GermNormalForm = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

struct MaxCommutativeResult {
  bool maximal;
  std::size_t dim_diagonal;
  std::size_t dim_centralizer;
  std::optional<Vector> witness;  // quotient coordinates; commutes with D, not in D
};

struct SSimpleResult {
  bool s_simple;
  std::optional<PointSet> witness;  // U with I(U) a nonzero proper invariant ideal
};

/// The skew inverse semigroup ring L_c(X) x| S built from a partial action.
///
/// L is realized on the atom-slices 1_K delta_s, ordered by (s, atom). N is
/// the span of 1_K delta_r - 1_K delta_s for r <= s and K inside X_r, kept as
/// a reduced basis with pivots at the highest columns, so the slices that
/// survive as quotient basis are the lexicographically first ones.
///
/// Everything at the level of L works over any carrier; the quotient and
/// everything built on it needs a field and throws std::domain_error otherwise.
class SkewRing {
 public:
  SkewRing(PartialAction action, Carrier carrier);

  PartialAction const& action() const { return action_; }
  Carrier const& carrier() const { return carrier_; }
  Space const& space() const { return action_.space(); }
  InverseSemigroup const& semigroup() const { return action_.semigroup(); }

  // ---- L ----
  SkewElement term(std::size_t s, LcFun a) const;  // throws unless a in D_s
  SkewElement multiply(SkewElement const& x, SkewElement const& y) const;
  LcFun tau(SkewElement const& x) const;

  std::size_t dim_L() const { return slices_.size(); }
  std::vector<Slice> const& slices() const { return slices_; }
  std::optional<std::size_t> slice_index(std::size_t s, std::size_t atom) const;
  Vector to_L(SkewElement const& x) const;
  SkewElement from_L(Vector const& v) const;
  Vector mul_L(Vector const& a, Vector const& b) const;
  LcFun tau_L(Vector const& v) const;
  /// The generators 1_K delta_r - 1_K delta_s of N.
  std::vector<Vector> const& n_generators() const { return n_generators_; }

  // ---- equality modulo N: two engines ----
  bool in_N(Vector const& v) const;  // span oracle
  GermNormalForm germ_normal_form(Vector const& v) const;
  bool germ_zero(Vector const& v) const { return germ_normal_form(v).empty(); }
  Vector reexpand(GermNormalForm const& g) const;
  /// Representative of the germ class of s at p (p must lie in X_s).
  std::size_t germ_class(std::size_t p, std::size_t s) const;

  // ---- quotient ----
  std::size_t dim() const;
  std::size_t dim_N() const;
  std::vector<std::size_t> const& basis_slices() const;  // slice index per quotient coordinate
  Vector project(Vector const& v) const;                  // L -> L/N coordinates
  Vector lift(Vector const& q) const;                     // quotient coordinates -> L
  Vector mul(Vector const& a, Vector const& b) const;
  /// Sparse structure constants: basis_i * basis_j.
  std::vector<std::pair<std::size_t, Scalar>> const& structure(std::size_t i, std::size_t j) const;
  LcFun tau_q(Vector const& q) const { return tau_L(lift(q)); }

  // ---- diagonal ----
  SkewElement phi(LcFun const& a) const;
  bool in_diagonal_germs(Vector const& v) const;
  bool in_diagonal_span(Vector const& v) const;
  EchelonBasis const& diagonal() const;  // quotient coordinates

  EchelonBasis ideal_generated_by(Vector const& q) const;
  MaxCommutativeResult max_commutative() const;
  /// S-simplicity of L_c(X) computed from invariant ideal closures.
  SSimpleResult s_simple() const;

 private:
  void require_field() const;
  void build_quotient();

  PartialAction action_;
  Carrier carrier_;
  std::vector<Slice> slices_;
  std::vector<std::vector<long>> slice_at_;  // [s][atom]
  std::vector<std::vector<long>> slice_mul_;
  std::vector<Vector> n_generators_;
  std::vector<std::vector<std::size_t>> germ_rep_;  // [point][s]

  std::optional<EchelonBasis> n_basis_;
  std::vector<std::size_t> basis_slices_;
  std::vector<long> quotient_index_;  // slice -> quotient coordinate or -1
  std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> structure_;
  std::optional<EchelonBasis> diagonal_;
};

}  // namespace skewring
