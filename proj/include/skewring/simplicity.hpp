#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "skewring/skew.hpp"

namespace skewring {

/// Exhaustive survey of the principal ideals of L/N: every nonzero vector up
/// to scalar multiples, each closed under left and right multiplication.
struct BruteForceResult {
  bool ran = false;
  std::string skipped;  // why it did not run
  std::uint64_t vectors = 0;
  bool simple = false;               // every principal ideal is everything
  bool all_meet_diagonal = false;    // every principal ideal meets D
  bool all_have_tau_support = false; // every principal ideal has some f with tau(f) != 0
  std::optional<Vector> proper_ideal_generator;
  std::optional<Vector> misses_diagonal;
  std::optional<Vector> tau_zero_ideal_generator;
};

/// Number of projective points of GF(p)^d, or nullopt on overflow.
std::optional<std::uint64_t> projective_count(std::int64_t p, std::size_t d);

/// The cap is a dimension over GF(2); other prime fields are allowed as long
/// as they have no more projective points than GF(2)^cap.
bool within_bruteforce_cap(Carrier const& c, std::size_t dim, std::size_t cap);

BruteForceResult brute_force(SkewRing const& ring, std::size_t cap = 14);

struct CriterionResult {
  bool s_simple;
  bool max_commutative;
  bool simple;  // s_simple and max_commutative
};

CriterionResult criterion(SkewRing const& ring);

}  // namespace skewring
