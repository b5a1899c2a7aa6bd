#include "skewring/semigroup.hpp"

#include <algorithm>
#include <unordered_map>

#include <fmt/format.h>

#include "skewring/diagnostic.hpp"

namespace skewring {

namespace {

[[noreturn]] void fail(std::string axiom, std::string message, std::vector<std::string> witness) {
  throw ValidationError(Diagnostic{std::move(axiom), std::move(message), std::move(witness)});
}

}  // namespace

InverseSemigroup InverseSemigroup::from_table(std::vector<std::string> labels,
                                              std::vector<std::vector<std::size_t>> table,
                                              std::optional<std::size_t> unit, std::size_t cap) {
  std::size_t const n = labels.size();
  if (n == 0) fail("shape", "empty element list", {});
  if (n > cap) fail("size cap", fmt::format("{} elements exceeds the cap of {}", n, cap), {});
  {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i)
      if (!seen.emplace(labels[i], i).second) fail("shape", "duplicate element label", {labels[i]});
  }
  if (table.size() != n) fail("shape", fmt::format("table has {} rows, expected {}", table.size(), n), {});
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      fail("shape", fmt::format("row {} has {} entries, expected {}", i, table[i].size(), n), {labels[i]});
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] >= n) fail("shape", "table entry out of range", {labels[i], labels[j]});
  }

  auto const& T = table;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (T[T[a][b]][c] != T[a][T[b][c]])
          fail("associativity", "(ab)c != a(bc)", {labels[a], labels[b], labels[c]});

  InverseSemigroup S;
  S.star_.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> found;
    for (std::size_t t = 0; t < n; ++t)
      if (T[T[s][t]][s] == s && T[T[t][s]][t] == t) found.push_back(t);
    if (found.empty()) fail("inverse", "no t with sts = s and tst = t", {labels[s]});
    if (found.size() > 1) {
      std::vector<std::string> w{labels[s]};
      for (auto t : found) w.push_back(labels[t]);
      fail("inverse", "inverse not unique", w);
    }
    S.star_[s] = found.front();
  }

  for (std::size_t e = 0; e < n; ++e)
    if (T[e][e] == e) S.idempotents_.push_back(e);
  for (auto e : S.idempotents_)
    for (auto f : S.idempotents_)
      if (T[e][f] != T[f][e]) fail("idempotents commute", "ef != fe", {labels[e], labels[f]});

  S.leq_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (T[T[t][S.star_[s]]][s] == s) S.leq_[s].set(t);
  for (std::size_t s = 0; s < n; ++s) {
    if (!S.leq_[s][s]) fail("natural order", "not reflexive", {labels[s]});
    for (std::size_t t = 0; t < n; ++t) {
      if (s != t && S.leq_[s][t] && S.leq_[t][s]) fail("natural order", "not antisymmetric", {labels[s], labels[t]});
      if (!S.leq_[s][t]) continue;
      for (std::size_t u = 0; u < n; ++u)
        if (S.leq_[t][u] && !S.leq_[s][u]) fail("natural order", "not transitive", {labels[s], labels[t], labels[u]});
    }
  }

  if (unit) {
    std::size_t const one = *unit;
    if (one >= n) fail("unit", "unit index out of range", {});
    for (std::size_t s = 0; s < n; ++s)
      if (T[one][s] != s || T[s][one] != s) fail("unit", "unit is not a two-sided identity", {labels[one], labels[s]});
    for (auto e : S.idempotents_)
      if (!S.leq_[e][one]) fail("unit", "idempotent not below the unit", {labels[e]});
  }

  S.below_.resize(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t r = 0; r < n; ++r)
      if (S.leq_[r][s]) S.below_[s].push_back(r);

  S.labels_ = std::move(labels);
  S.table_ = std::move(table);
  S.unit_ = unit;
  return S;
}

std::optional<std::size_t> InverseSemigroup::find(std::string const& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t InverseSemigroup::index(std::string const& label) const {
  if (auto i = find(label)) return *i;
  throw ParseError("unknown semigroup element '" + label + "'");
}

namespace {

// Snake elements as ranks: naturals 1..n (and the tail class n+1 when
// present) multiply by min; inf and z sit above all of them.
InverseSemigroup build_snake(std::size_t n, bool tail) {
  std::size_t const nat = n + (tail ? 1 : 0);
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= n; ++k) labels.push_back(std::to_string(k));
  if (tail) labels.push_back(fmt::format(">{}", n));
  std::size_t const inf = nat, z = nat + 1;
  labels.push_back("inf");
  labels.push_back("z");
  std::vector<std::vector<std::size_t>> t(nat + 2, std::vector<std::size_t>(nat + 2));
  for (std::size_t a = 0; a < nat + 2; ++a)
    for (std::size_t b = 0; b < nat + 2; ++b) {
      if (a < nat || b < nat)
        t[a][b] = std::min(a, b);
      else if (a == z && b == z)
        t[a][b] = inf;
      else if (a == z || b == z)
        t[a][b] = z;
      else
        t[a][b] = inf;
    }
  return InverseSemigroup::from_table(std::move(labels), std::move(t), inf);
}

}  // namespace

InverseSemigroup snake_semigroup(std::size_t n) { return build_snake(n, false); }
InverseSemigroup snake_semigroup_with_tail(std::size_t n) { return build_snake(n, true); }

InverseSemigroup min_semilattice(std::size_t k) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> t(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < k; ++b) t[a][b] = std::min(a, b);
  }
  return InverseSemigroup::from_table(std::move(labels), std::move(t), k - 1);
}

InverseSemigroup cyclic_group(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return InverseSemigroup::from_table(std::move(labels), std::move(t), 0);
}

}  // namespace skewring
