#include "skewring/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "skewring/diagnostic.hpp"
#include "skewring/json_io.hpp"
#include "skewring/simplicity.hpp"

namespace skewring {

namespace {

PartialPerm compose(PartialPerm const& s, PartialPerm const& t) {
  PartialPerm r(t.size(), -1);
  for (std::size_t x = 0; x < t.size(); ++x)
    if (t[x] >= 0) r[x] = s[t[x]];
  return r;
}

PartialPerm invert(PartialPerm const& s) {
  PartialPerm r(s.size(), -1);
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s[x] >= 0) r[s[x]] = static_cast<int>(x);
  return r;
}

std::string spell(PartialPerm const& s) {
  std::string out = "[";
  for (int v : s) out += v < 0 ? '-' : static_cast<char>('1' + v);
  return out + "]";
}

// Builds an action from maps alone: X_s is the image of theta_s.
PartialAction from_maps(InverseSemigroup s, Space x, std::vector<std::vector<long>> maps) {
  ActionData d;
  for (auto const& m : maps) {
    PointSet dom = x.empty();
    for (long v : m)
      if (v >= 0) dom.set(static_cast<std::size_t>(v));
    d.domains.push_back(dom);
  }
  d.maps = std::move(maps);
  return PartialAction(std::move(s), std::move(x), std::move(d));
}

}  // namespace

InverseSemigroup partial_perm_semigroup(std::vector<PartialPerm> const& gens, std::size_t max_order) {
  std::vector<PartialPerm> elems;
  std::set<PartialPerm> seen;
  auto add = [&](PartialPerm const& p) {
    if (seen.insert(p).second) elems.push_back(p);
  };
  for (auto const& g : gens) {
    add(g);
    add(invert(g));
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems.size() > max_order) throw CapExceeded("generated semigroup exceeds the order cap");
    for (std::size_t j = 0; j <= i; ++j) {
      add(compose(elems[i], elems[j]));
      add(compose(elems[j], elems[i]));
    }
  }
  if (elems.size() > max_order) throw CapExceeded("generated semigroup exceeds the order cap");
  std::sort(elems.begin(), elems.end());
  std::map<PartialPerm, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index[elems[i]] = i;
    labels.push_back(spell(elems[i]));
  }
  std::vector<std::vector<std::size_t>> t(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) t[i][j] = index.at(compose(elems[i], elems[j]));
  return InverseSemigroup::from_table(std::move(labels), std::move(t), std::nullopt, std::max<std::size_t>(max_order, 1));
}

PartialAction natural_action(InverseSemigroup const& s) {
  // Recover each element's partial permutation from its label.
  std::vector<PartialPerm> perms;
  for (auto const& l : s.labels()) {
    PartialPerm p;
    for (std::size_t k = 1; k + 1 < l.size(); ++k) p.push_back(l[k] == '-' ? -1 : l[k] - '1');
    perms.push_back(p);
  }
  std::size_t const m = perms.empty() ? 0 : perms.front().size();
  std::vector<long> point(m, -1);
  std::size_t n = 0;
  for (std::size_t x = 0; x < m; ++x)
    for (auto const& p : perms)
      if (p[x] >= 0 && point[x] < 0) point[x] = static_cast<long>(n++);
  std::vector<std::vector<long>> maps;
  for (auto const& p : perms) {
    std::vector<long> mp(n, -1);
    for (std::size_t x = 0; x < m; ++x)
      if (p[x] >= 0) mp[point[x]] = point[p[x]];
    maps.push_back(std::move(mp));
  }
  return from_maps(s, Space::finite(n), std::move(maps));
}

PartialAction disjoint_union(PartialAction const& a, PartialAction const& b) {
  std::size_t const na = a.space().size(), nb = b.space().size();
  std::vector<std::vector<long>> maps;
  for (std::size_t s = 0; s < a.semigroup().size(); ++s) {
    std::vector<long> m(na + nb, -1);
    for (std::size_t p = 0; p < na; ++p) m[p] = a.maps()[s][p];
    for (std::size_t p = 0; p < nb; ++p)
      if (b.maps()[s][p] >= 0) m[na + p] = b.maps()[s][p] + static_cast<long>(na);
    maps.push_back(std::move(m));
  }
  return from_maps(a.semigroup(), Space::finite(na + nb), std::move(maps));
}

PartialAction times_two_points(PartialAction const& a) {
  std::size_t const n = a.space().size();
  std::vector<std::vector<long>> maps;
  for (std::size_t s = 0; s < a.semigroup().size(); ++s) {
    std::vector<long> m(2 * n, -1);
    for (std::size_t p = 0; p < n; ++p)
      if (a.maps()[s][p] >= 0)
        for (long i = 0; i < 2; ++i) m[2 * p + i] = 2 * a.maps()[s][p] + i;
    maps.push_back(std::move(m));
  }
  return from_maps(a.semigroup(), Space::finite(2 * n), std::move(maps));
}

PartialAction restrict_action(PartialAction const& a, PointSet const& y) {
  auto const pts = members(y);
  std::vector<long> index(a.space().size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<long>(i);
  std::vector<std::vector<long>> maps;
  for (std::size_t s = 0; s < a.semigroup().size(); ++s) {
    std::vector<long> m(pts.size(), -1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      long v = a.maps()[s][pts[i]];
      if (v >= 0) m[i] = index[v];
    }
    maps.push_back(std::move(m));
  }
  return from_maps(a.semigroup(), Space::finite(pts.size()), std::move(maps));
}

std::vector<CorpusEntry> generate_corpus(CorpusOptions const& opt) {
  std::mt19937_64 rng(opt.seed);
  auto roll = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;
  for (std::size_t attempt = 0; out.size() < opt.count && attempt < opt.count * 400; ++attempt) {
    std::size_t const m = 1 + roll(opt.max_degree);
    std::size_t const k = 1 + roll(3);
    std::vector<PartialPerm> gens;
    for (std::size_t g = 0; g < k; ++g) {
      PartialPerm p(m);
      for (std::size_t x = 0; x < m; ++x) p[x] = static_cast<int>(x);
      for (std::size_t x = m; x > 1; --x) std::swap(p[x - 1], p[roll(x)]);
      for (auto& v : p)
        if (roll(3) == 0) v = -1;
      gens.push_back(p);
    }
    try {
      auto s = partial_perm_semigroup(gens, opt.max_order);
      auto nat = natural_action(s);
      if (nat.space().size() == 0) continue;
      std::string origin;
      std::optional<PartialAction> act;
      switch (roll(5)) {
        case 0:
          origin = "natural";
          act = nat;
          break;
        case 1:
          origin = "munn";
          act = munn_action(s);
          break;
        case 2:
          origin = "natural+munn";
          act = disjoint_union(nat, munn_action(s));
          break;
        case 3:
          origin = "natural x 2";
          act = times_two_points(nat);
          break;
        default: {
          auto base = roll(2) == 0 ? nat : munn_action(s);
          auto orbs = orbits(base);
          PointSet y = base.space().empty();
          for (auto const& o : orbs)
            if (roll(2) == 0) y |= o;
          if (y.none()) y = orbs.front();
          origin = "restricted";
          act = restrict_action(base, y);
        }
      }
      if (act->space().size() == 0 || act->space().size() > opt.max_points) continue;
      SkewRing ring(*act, Carrier::gf(2));
      if (!within_bruteforce_cap(Carrier::gf(2), ring.dim(), opt.bruteforce_cap)) continue;
      if (!seen.insert(to_json(*act).dump()).second) continue;
      out.push_back({origin, std::move(*act)});
    } catch (CapExceeded const&) {
      continue;
    } catch (std::invalid_argument const&) {
      continue;  // only the empty map: nothing to act on
    }
  }
  return out;
}

}  // namespace skewring
