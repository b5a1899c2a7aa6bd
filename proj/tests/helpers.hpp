#pragma once

#include <initializer_list>

#include "skewring/skew.hpp"

namespace skewring::testing {

// 1-based window points, plus optional tail / inf.
inline PointSet pts(Space const& x, std::initializer_list<std::size_t> one_based, bool tail = false,
                    bool inf = false) {
  PointSet s = x.empty();
  for (auto p : one_based) s.set(p - 1);
  if (tail) s.set(x.tail());
  if (inf) s.set(x.infinity());
  return s;
}

// [n, inf] on omega_plus.
inline PointSet from_n(Space const& x, std::size_t n) {
  PointSet s = x.empty();
  for (std::size_t p = n - 1; p < x.size(); ++p) s.set(p);
  return s;
}

inline SkewElement term(SkewRing const& r, std::string const& s, PointSet const& k, std::int64_t v = 1) {
  return r.term(r.semigroup().index(s), LcFun::indicator(r.space(), r.carrier(), k, Scalar(r.carrier(), v)));
}

inline bool same_span(EchelonBasis const& a, EchelonBasis const& b) {
  if (a.rank() != b.rank()) return false;
  for (auto const& row : a.rows())
    if (!b.contains(row)) return false;
  return true;
}

}  // namespace skewring::testing
