#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "skewring/linalg.hpp"
#include "skewring/scalar.hpp"

namespace skewring {

using PointSet = boost::dynamic_bitset<>;

/// A zero-dimensional base space with finitely many model points.
///
/// finite(n): n isolated points.
/// omega_plus(W): N u {inf} seen through a window. Points 0..W-1 are the
/// naturals 1..W, point W is a single representative for every natural
/// beyond the window ("tail"), point W+1 is inf. A set is open when it holds
/// the tail whenever it holds inf, and compact-open when it holds both or
/// neither. Everything here is decided on those W+2 points.
class Space {
 public:
  enum class Kind { finite, omega_plus };

  static Space finite(std::size_t n);
  static Space omega_plus(std::size_t window);

  Kind kind() const { return kind_; }
  std::size_t size() const { return points_; }
  std::size_t window() const { return window_; }
  std::size_t tail() const { return window_; }
  std::size_t infinity() const { return window_ + 1; }
  bool is_omega() const { return kind_ == Kind::omega_plus; }

  /// "1".."n" for explicit points, "tail" and "inf" for the two symbolic ones.
  std::string point_name(std::size_t p) const;

  PointSet empty() const { return PointSet(points_); }
  PointSet full() const { return ~PointSet(points_); }
  PointSet singleton(std::size_t p) const;

  bool is_open(PointSet const& u) const;
  bool is_compact_open(PointSet const& u) const;
  PointSet closure(PointSet const& t) const;
  PointSet interior(PointSet const& t) const;
  /// closure(a) contains v.
  bool is_dense_in(PointSet const& a, PointSet const& v) const { return v.is_subset_of(closure(a)); }
  /// Smallest open set containing t.
  PointSet open_hull(PointSet const& t) const;

  /// The finest compact-open partition: singletons, plus {tail, inf} on omega_plus.
  std::vector<PointSet> const& atoms() const { return atoms_; }
  std::size_t atom_of(std::size_t p) const { return atom_of_[p]; }
  /// The point whose germs stand for its atom: inf for the tail block.
  std::size_t reference_point(std::size_t atom) const;

  friend bool operator==(Space const& a, Space const& b) { return a.kind_ == b.kind_ && a.points_ == b.points_; }

 private:
  Space(Kind k, std::size_t points, std::size_t window);

  Kind kind_;
  std::size_t points_;
  std::size_t window_;
  std::vector<PointSet> atoms_;
  std::vector<std::size_t> atom_of_;
};

/// Coarsest partition of X refining every input set.
std::vector<PointSet> atoms(Space const& x, std::vector<PointSet> const& sets);

std::vector<std::size_t> members(PointSet const& s);
std::string format_set(Space const& x, PointSet const& s);

/// A locally constant compactly supported function, stored by value at each
/// model point. On omega_plus the tail and inf values always agree.
class LcFun {
 public:
  LcFun(Space space, Carrier carrier);
  /// Throws std::invalid_argument if tail and inf values differ.
  LcFun(Space space, std::vector<Scalar> values);

  static LcFun indicator(Space const& space, Carrier c, PointSet const& set);
  static LcFun indicator(Space const& space, Carrier c, PointSet const& set, Scalar value);

  Space const& space() const { return space_; }
  Carrier const& carrier() const { return carrier_; }
  Scalar const& at(std::size_t p) const { return values_[p]; }
  std::vector<Scalar> const& values() const { return values_; }
  PointSet support() const;
  bool is_zero() const;

  /// Canonical form: maximal pieces of equal nonzero value, ordered by first point.
  std::vector<std::pair<PointSet, Scalar>> pieces() const;

  LcFun& operator+=(LcFun const& o);
  LcFun& operator-=(LcFun const& o);
  LcFun& operator*=(LcFun const& o);
  LcFun& operator*=(Scalar const& c);

  friend LcFun operator+(LcFun a, LcFun const& b) { return a += b; }
  friend LcFun operator-(LcFun a, LcFun const& b) { return a -= b; }
  friend LcFun operator*(LcFun a, LcFun const& b) { return a *= b; }
  friend LcFun operator*(Scalar const& c, LcFun a) { return a *= c; }
  friend bool operator==(LcFun const& a, LcFun const& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }

  std::string to_string() const;

 private:
  void check_same(LcFun const& o) const;

  Space space_;
  Carrier carrier_;
  std::vector<Scalar> values_;
};

/// Coordinates of f on the atom basis.
Vector atom_coordinates(LcFun const& f);
LcFun from_atom_coordinates(Space const& x, Carrier c, Vector const& v);

/// I(U) = {f : supp f inside U}, as a list of atom indicators.
std::vector<LcFun> ideal_of_open(Space const& x, Carrier c, PointSet const& u);
/// I(T) = {f : f vanishes on T}.
std::vector<LcFun> vanishing_ideal(Space const& x, Carrier c, PointSet const& t);

struct IdealInLc {
  EchelonBasis basis;  // in atom coordinates
  PointSet support;    // union of supports over the ideal
};

/// Ideal of L_c(X) generated by the given functions, and the open set it
/// corresponds to. Needs a field.
IdealInLc ideal_closure(Space const& x, Carrier c, std::vector<LcFun> const& generators);

}  // namespace skewring
