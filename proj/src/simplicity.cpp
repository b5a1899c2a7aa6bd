#include "skewring/simplicity.hpp"

#include <vector>

namespace skewring {

namespace {

using Word = std::uint32_t;
using Row = std::vector<Word>;

// Row-reduced subspace of GF(p)^d on plain integers; the exhaustive survey
// spends all its time here.
class ModpBasis {
 public:
  ModpBasis(Word p, std::size_t d, std::vector<Word> const* inv) : p_(p), d_(d), inv_(inv), pivot_row_(d, -1) {}

  void reduce(Row& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Word c = v[pivots_[r]];
      if (c == 0) continue;
      Word neg = p_ - c;
      Row const& row = rows_[r];
      for (std::size_t k = 0; k < d_; ++k)
        if (row[k]) v[k] = static_cast<Word>((v[k] + static_cast<std::uint64_t>(neg) * row[k]) % p_);
    }
  }

  bool insert(Row v) {
    reduce(v);
    std::size_t piv = 0;
    while (piv < d_ && v[piv] == 0) ++piv;
    if (piv == d_) return false;
    Word inv = (*inv_)[v[piv]];
    for (auto& x : v) x = static_cast<Word>(static_cast<std::uint64_t>(x) * inv % p_);
    for (auto& row : rows_) {
      Word c = row[piv];
      if (c == 0) continue;
      Word neg = p_ - c;
      for (std::size_t k = 0; k < d_; ++k)
        if (v[k]) row[k] = static_cast<Word>((row[k] + static_cast<std::uint64_t>(neg) * v[k]) % p_);
    }
    pivot_row_[piv] = static_cast<long>(rows_.size());
    pivots_.push_back(piv);
    rows_.push_back(std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::vector<Row> const& rows() const { return rows_; }

 private:
  Word p_;
  std::size_t d_;
  std::vector<Word> const* inv_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;
};

struct Entry {
  std::size_t k;
  Word c;
};

Word residue(Scalar const& s) { return static_cast<Word>(s.numerator()); }

Vector to_vector(Carrier c, Row const& r) {
  Vector v;
  for (auto x : r) v.emplace_back(c, static_cast<std::int64_t>(x));
  return v;
}

}  // namespace

std::optional<std::uint64_t> projective_count(std::int64_t p, std::size_t d) {
  // 1 + p + ... + p^{d-1}
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total += power;
    if (total > (1ULL << 62)) return std::nullopt;
    if (i + 1 < d) {
      if (power > (1ULL << 62) / static_cast<std::uint64_t>(p)) return std::nullopt;
      power *= static_cast<std::uint64_t>(p);
    }
  }
  return total;
}

bool within_bruteforce_cap(Carrier const& c, std::size_t dim, std::size_t cap) {
  if (!c.is_field() || !c.is_finite()) return false;
  if (cap >= 62) return false;
  auto n = projective_count(c.modulus(), dim);
  return n && *n <= (1ULL << cap) - 1;
}

BruteForceResult brute_force(SkewRing const& ring, std::size_t cap) {
  BruteForceResult r;
  Carrier const c = ring.carrier();
  if (!c.is_field()) {
    r.skipped = "carrier " + c.name() + " is not a field";
    return r;
  }
  if (!c.is_finite()) {
    r.skipped = "exhaustive enumeration needs a finite field";
    return r;
  }
  std::size_t const d = ring.dim();
  if (!within_bruteforce_cap(c, d, cap)) {
    r.skipped = "dimension " + std::to_string(d) + " over " + c.name() + " exceeds the enumeration cap " +
                std::to_string(cap);
    return r;
  }
  Word const p = static_cast<Word>(c.modulus());
  std::vector<Word> inv(p, 0);
  for (Word a = 1; a < p; ++a)
    for (Word b = 1; b < p; ++b)
      if (static_cast<std::uint64_t>(a) * b % p == 1) inv[a] = b;

  std::vector<std::vector<std::vector<Entry>>> table(d, std::vector<std::vector<Entry>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (auto const& [k, v] : ring.structure(i, j)) table[i][j].push_back({k, residue(v)});

  ModpBasis diag(p, d, &inv);
  for (auto const& row : ring.diagonal().rows()) {
    Row w;
    for (auto const& x : row) w.push_back(residue(x));
    diag.insert(w);
  }
  // atom of each quotient basis slice, for tau
  std::vector<std::size_t> atom_of;
  std::size_t const atoms = ring.space().atoms().size();
  for (auto i : ring.basis_slices()) atom_of.push_back(ring.slices()[i].atom);

  auto left = [&](std::size_t i, Row const& v) {  // e_i * v
    Row out(d, 0);
    for (std::size_t j = 0; j < d; ++j)
      if (v[j])
        for (auto const& [k, c2] : table[i][j]) out[k] = static_cast<Word>((out[k] + static_cast<std::uint64_t>(v[j]) * c2) % p);
    return out;
  };
  auto right = [&](Row const& v, std::size_t i) {  // v * e_i
    Row out(d, 0);
    for (std::size_t j = 0; j < d; ++j)
      if (v[j])
        for (auto const& [k, c2] : table[j][i]) out[k] = static_cast<Word>((out[k] + static_cast<std::uint64_t>(v[j]) * c2) % p);
    return out;
  };

  r.ran = true;
  r.simple = r.all_meet_diagonal = r.all_have_tau_support = true;
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::size_t const free = d - lead - 1;
    Row tailv(free, 0);
    for (;;) {
      Row v(d, 0);
      v[lead] = 1;
      for (std::size_t k = 0; k < free; ++k) v[lead + 1 + k] = tailv[k];
      ++r.vectors;

      ModpBasis ideal(p, d, &inv);
      std::vector<Row> queue;
      ideal.insert(v);
      queue.push_back(ideal.rows().back());
      while (!queue.empty() && ideal.rank() < d) {
        Row w = std::move(queue.back());
        queue.pop_back();
        for (std::size_t i = 0; i < d && ideal.rank() < d; ++i) {
          Row a = left(i, w);
          if (ideal.insert(a)) queue.push_back(std::move(a));
          Row b = right(w, i);
          if (ideal.insert(b)) queue.push_back(std::move(b));
        }
      }

      if (ideal.rank() < d) {
        if (r.simple) r.proper_ideal_generator = to_vector(c, v);
        r.simple = false;
        ModpBasis sum = ideal;
        for (auto const& row : diag.rows()) sum.insert(row);
        if (sum.rank() == ideal.rank() + diag.rank()) {
          if (r.all_meet_diagonal) r.misses_diagonal = to_vector(c, v);
          r.all_meet_diagonal = false;
        }
        bool tau_nonzero = false;
        for (auto const& row : ideal.rows()) {
          std::vector<std::uint64_t> t(atoms, 0);
          for (std::size_t i = 0; i < d; ++i) t[atom_of[i]] += row[i];
          for (auto x : t)
            if (x % p) tau_nonzero = true;
          if (tau_nonzero) break;
        }
        if (!tau_nonzero) {
          if (r.all_have_tau_support) r.tau_zero_ideal_generator = to_vector(c, v);
          r.all_have_tau_support = false;
        }
      }

      std::size_t k = 0;
      while (k < free && ++tailv[k] == p) tailv[k++] = 0;
      if (k == free) break;
    }
  }
  return r;
}

CriterionResult criterion(SkewRing const& ring) {
  bool s = ring.s_simple().s_simple;
  bool m = ring.max_commutative().maximal;
  return {s, m, s && m};
}

}  // namespace skewring
