#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace skewring {

/// A finite inverse semigroup given by its multiplication table.
///
/// Elements are dense indices 0..n-1 with string labels. Construction
/// validates everything (associativity, unique inverses, commuting
/// idempotents, the natural order) and throws ValidationError otherwise.
/// Immutable afterwards.
class InverseSemigroup {
 public:
  static constexpr std::size_t default_cap = 64;

  /// table[i][j] is the index of labels[i]*labels[j].
  static InverseSemigroup from_table(std::vector<std::string> labels,
                                     std::vector<std::vector<std::size_t>> table,
                                     std::optional<std::size_t> unit = std::nullopt,
                                     std::size_t cap = default_cap);

  std::size_t size() const { return labels_.size(); }
  std::string const& label(std::size_t s) const { return labels_[s]; }
  std::vector<std::string> const& labels() const { return labels_; }
  std::optional<std::size_t> find(std::string const& label) const;
  std::size_t index(std::string const& label) const;  // throws ParseError

  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t star(std::size_t s) const { return star_[s]; }
  bool is_idempotent(std::size_t s) const { return table_[s][s] == s; }
  std::vector<std::size_t> const& idempotents() const { return idempotents_; }
  std::optional<std::size_t> unit() const { return unit_; }

  /// Natural partial order: s <= t iff s = t s* s.
  bool leq(std::size_t s, std::size_t t) const { return leq_[s][t]; }
  /// All r with r <= s, ascending.
  std::vector<std::size_t> const& below(std::size_t s) const { return below_[s]; }

  std::vector<std::vector<std::size_t>> const& table() const { return table_; }
  bool is_group() const { return idempotents_.size() == 1; }

 private:
  InverseSemigroup() = default;

  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> star_;
  std::vector<std::size_t> idempotents_;
  std::optional<std::size_t> unit_;
  std::vector<boost::dynamic_bitset<>> leq_;
  std::vector<std::vector<std::size_t>> below_;
};

/// The two-headed snake truncated at n: elements 1..n, inf, z with
/// nm = min(n,m), n inf = inf n = nz = zn = n, z inf = inf z = z, zz = inf inf = inf.
InverseSemigroup snake_semigroup(std::size_t n);

/// The snake with an extra element ">n" standing for every natural beyond the
/// window: it behaves like a number larger than all of 1..n.
InverseSemigroup snake_semigroup_with_tail(std::size_t n);

/// {0,...,k-1} under min.
InverseSemigroup min_semilattice(std::size_t k);

/// Z/n under addition.
InverseSemigroup cyclic_group(std::size_t n);

}  // namespace skewring
