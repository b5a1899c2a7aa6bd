#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewring/action.hpp"

namespace skewring {

/// A partial permutation of {0..m-1}; -1 marks an undefined point.
using PartialPerm = std::vector<int>;

/// The inverse subsemigroup of I_m generated by gens, with s*t = s o t
/// (t applied first). Labels spell the images, e.g. "[2-1]".
InverseSemigroup partial_perm_semigroup(std::vector<PartialPerm> const& gens, std::size_t max_order = 64);

/// X = union of the ranges, X_s = ran s, theta_s = s.
PartialAction natural_action(InverseSemigroup const& s);

PartialAction disjoint_union(PartialAction const& a, PartialAction const& b);
/// a x {0,1}, acting trivially on the second factor.
PartialAction times_two_points(PartialAction const& a);
/// Restriction to an invariant subset.
PartialAction restrict_action(PartialAction const& a, PointSet const& y);

struct CorpusOptions {
  std::size_t count = 60;
  std::uint64_t seed = 7;
  std::size_t max_points = 5;
  std::size_t max_order = 6;
  std::size_t max_degree = 3;      // m in I_m
  std::size_t bruteforce_cap = 14; // every entry must be brute-forceable over GF(2)
};

struct CorpusEntry {
  std::string origin;
  PartialAction action;
};

/// Deterministic for a given seed; entries are distinct as JSON.
std::vector<CorpusEntry> generate_corpus(CorpusOptions const& opt);

}  // namespace skewring
