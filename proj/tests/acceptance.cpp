// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <fmt/format.h>

#include "skewring/analysis.hpp"
#include "skewring/corpus.hpp"
#include "skewring/gallery.hpp"
#include "skewring/simplicity.hpp"

using namespace skewring;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, std::string const& title, std::function<Outcome()> const& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (std::exception const& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("[%s] criterion %d: %s (%s; %.2fs)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(),
              secs);
  std::fflush(stdout);
}

struct Instance {
  std::string origin;
  SkewRing ring;
};

// The shared corpus: every action over GF(2), and over GF(3) when the
// exhaustive survey fits under the cap.
std::vector<Instance> build_corpus(std::size_t& actions) {
  CorpusOptions opt;
  opt.count = 60;
  opt.seed = 7;
  auto entries = generate_corpus(opt);
  actions = entries.size();
  std::vector<Instance> out;
  for (auto const& e : entries) {
    out.push_back({e.origin, SkewRing(e.action, Carrier::gf(2))});
    SkewRing r3(e.action, Carrier::gf(3));
    if (within_bruteforce_cap(r3.carrier(), r3.dim(), opt.bruteforce_cap)) out.push_back({e.origin, std::move(r3)});
  }
  return out;
}

Vector random_vector(std::mt19937_64& rng, Carrier c, std::size_t n) {
  Vector v = zero_vector(c, n);
  for (auto& x : v) x = Scalar(c, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(c.modulus())));
  return v;
}

PointSet from_n(Space const& x, std::size_t n) {
  PointSet s = x.empty();
  for (std::size_t p = n - 1; p < x.size(); ++p) s.set(p);
  return s;
}

}  // namespace

int main() {
  std::size_t actions = 0;
  auto corpus = build_corpus(actions);
  std::vector<BruteForceResult> bf;
  std::vector<CriterionResult> crit;
  auto t0 = Clock::now();
  for (auto const& inst : corpus) {
    bf.push_back(brute_force(inst.ring));
    crit.push_back(criterion(inst.ring));
  }
  double const survey_secs = std::chrono::duration<double>(Clock::now() - t0).count();

  report(1, "bruteforce simple iff S-simple and diagonal maximal commutative", [&]() -> Outcome {
    std::size_t compared = 0, disagree = 0, simple = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!bf[i].ran) return {false, "bruteforce skipped on a corpus instance: " + bf[i].skipped};
      ++compared;
      if (bf[i].simple != crit[i].simple) ++disagree;
      if (bf[i].simple) ++simple;
    }
    bool ok = actions >= 50 && disagree == 0 && simple > 0 && simple < compared && survey_secs < 300;
    return {ok, fmt::format("{} actions, {} runs, {} simple, {} disagreements, survey {:.2f}s", actions, compared, simple,
                           disagree, survey_secs)};
  });

  report(2, "diagonal maximal commutative iff every principal ideal meets D", [&]() -> Outcome {
    std::size_t disagree = 0, full = 0, maximal = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!bf[i].ran) return {false, "bruteforce skipped"};
      auto const& r = corpus[i].ring;
      if (r.carrier().modulus() == 2 && bf[i].vectors == (std::uint64_t{1} << r.dim()) - 1) ++full;
      if (bf[i].all_meet_diagonal != crit[i].max_commutative) ++disagree;
      if (crit[i].max_commutative) ++maximal;
    }
    return {disagree == 0 && full == actions && maximal < corpus.size(),
            fmt::format("{} runs ({} not maximal), all 2^dim-1 vectors over GF(2) in {} actions, {} disagreements",
                        corpus.size(), corpus.size() - maximal, full, disagree)};
  });

  report(3, "germ normal form agrees with the span oracle; H n N = 0; tau kills N", [&]() -> Outcome {
    std::mt19937_64 rng(2024);
    std::size_t checked = 0, disagree = 0, homogeneous = 0, h_fail = 0, gens = 0, tau_fail = 0;
    std::size_t const per = 10000 / corpus.size() + 1;
    for (auto const& inst : corpus) {
      auto const& r = inst.ring;
      Carrier const c = r.carrier();
      std::size_t const n = r.dim_L();
      auto agree = [&](Vector const& v, int expect_zero) {
        bool span = r.in_N(v), germ = r.germ_zero(v);
        ++checked;
        if (span != germ || (expect_zero >= 0 && span != static_cast<bool>(expect_zero))) ++disagree;
      };
      for (std::size_t k = 0; k < per; ++k) {
        Vector v = random_vector(rng, c, n);
        agree(v, -1);
        Vector w = zero_vector(c, n);
        for (auto const& g : r.n_generators()) axpy(w, Scalar(c, static_cast<std::int64_t>(rng() % 3)), g);
        agree(w, 1);
        Vector d = v;
        axpy(d, -Scalar::one(c), r.reexpand(r.germ_normal_form(v)));
        agree(d, 1);
      }
      // a delta_s with a != 0 in D_s: random coefficients on the slices of s
      for (std::size_t s = 0; s < r.semigroup().size(); ++s) {
        for (int rep = 0; rep < 4; ++rep) {
          Vector v = zero_vector(c, n);
          for (std::size_t i = 0; i < n; ++i)
            if (r.slices()[i].s == s) v[i] = Scalar(c, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(c.modulus())));
          if (is_zero(v)) continue;
          ++homogeneous;
          if (r.in_N(v) || r.germ_zero(v)) ++h_fail;
        }
      }
      for (auto const& g : r.n_generators()) {
        ++gens;
        if (!r.tau_L(g).is_zero()) ++tau_fail;
      }
    }
    return {checked >= 10000 && disagree == 0 && h_fail == 0 && tau_fail == 0,
            fmt::format("{} elements, {} disagreements; {} homogeneous terms, {} in N; {} N-generators, {} with tau != 0",
                        checked, disagree, homogeneous, h_fail, gens, tau_fail)};
  });

  report(4, "phi is an injective ring morphism with tau(phi(a)) = a", [&]() -> Outcome {
    std::size_t fails = 0, pairs = 0;
    for (auto const& inst : corpus) {
      auto const& r = inst.ring;
      auto const& x = r.space();
      Carrier const c = r.carrier();
      std::vector<LcFun> basis;
      for (auto const& a : x.atoms()) basis.push_back(LcFun::indicator(x, c, a));
      EchelonBasis image(c, r.dim());
      for (auto const& f : basis) {
        if (!(r.tau(r.phi(f)) == f)) ++fails;
        image.insert(r.project(r.to_L(r.phi(f))));
      }
      if (image.rank() != basis.size()) ++fails;  // injective on the spanning set
      for (auto const& f : basis)
        for (auto const& g : basis) {
          ++pairs;
          Vector prod = r.to_L(r.phi(f * g));
          axpy(prod, -Scalar::one(c), r.to_L(r.multiply(r.phi(f), r.phi(g))));
          Vector sum = r.to_L(r.phi(f + g) - r.phi(f) - r.phi(g));
          if (!r.in_N(prod) || !r.in_N(sum)) ++fails;
        }
    }
    return {fails == 0, fmt::format("{} runs, {} atom pairs, {} failures", corpus.size(), pairs, fails)};
  });

  report(5, "two-headed snake, windows 3..5 over GF(2) and Q", [&]() -> Outcome {
    auto start = Clock::now();
    std::vector<std::string> bad;
    for (std::size_t w : {3, 4, 5}) {
      auto a = snake_action(w);
      if (!is_topologically_principal(a).principal) bad.push_back(fmt::format("W={} principal", w));
      if (is_topologically_free(a).free) bad.push_back(fmt::format("W={} free", w));
      if (is_minimal(a).minimal) bad.push_back(fmt::format("W={} minimal", w));
      for (auto c : {Carrier::gf(2), Carrier::rationals()}) {
        SkewRing r(a, c);
        auto const& x = r.space();
        auto z = r.semigroup().index("z"), inf = r.semigroup().index("inf");
        std::string tag = fmt::format("W={} {}", w, c.name());
        bool not_simple_shown = false;
        for (std::size_t n = 1; n <= w; ++n) {
          auto one = LcFun::indicator(x, c, from_n(x, n));
          Vector zn = r.to_L(r.term(z, one));
          if (r.in_diagonal_span(zn) || r.in_diagonal_germs(zn)) bad.push_back(tag + " z-term in D");
          Vector q = r.project(zn);
          for (auto const& atom : x.atoms()) {
            Vector d = r.project(r.to_L(r.phi(LcFun::indicator(x, c, atom))));
            if (!(r.mul(q, d) == r.mul(d, q))) bad.push_back(tag + " z-term does not commute with D");
          }
          auto j = r.ideal_generated_by(r.project(r.to_L(r.term(z, one) - r.term(inf, one))));
          if (j.rank() == 0) bad.push_back(tag + " J_n zero");
          if (intersection_dim(j, r.diagonal()) != 0) bad.push_back(tag + " J_n meets D");
          for (auto const& row : j.rows())
            if (!r.tau_q(row).is_zero()) bad.push_back(tag + " tau nonzero on J_n");
          if (j.rank() > 0 && j.rank() < r.dim()) not_simple_shown = true;
        }
        if (!not_simple_shown) bad.push_back(tag + " no proper ideal");
        if (c.is_finite()) {
          auto b = brute_force(r);
          if (!b.ran || b.simple) bad.push_back(tag + " bruteforce");
        }
        if (criterion(r).simple) bad.push_back(tag + " criterion");
      }
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= 10) bad.push_back(fmt::format("took {:.1f}s", secs));
    return {bad.empty(), bad.empty() ? "six facts hold for all six runs" : bad.front()};
  });

  report(6, "Steinberg algebra isomorphism and simplicity", [&]() -> Outcome {
    struct Case {
      std::string name;
      Groupoid g;
      Carrier c;
      bool simple;
    };
    std::vector<Case> cases;
    for (auto c : {Carrier::gf(2), Carrier::gf(3)}) {
      cases.push_back({"P_2", pair_groupoid(2), c, true});
      cases.push_back({"P_3", pair_groupoid(3), c, true});
      cases.push_back({"unit(3)", unit_groupoid(3), c, false});
      cases.push_back({"Z/2", cyclic_group_groupoid(2), c, false});
    }
    cases.push_back({"P_2", pair_groupoid(2), Carrier::zmod(4), false});
    std::vector<std::string> bad;
    for (auto const& k : cases) {
      AnalyzeOptions opt;
      opt.carrier = k.c;
      auto r = analyze_groupoid(k.g, opt);
      auto const& j = r.json;
      std::string tag = k.name + " " + k.c.name();
      for (auto key : {"psi_kills_N", "psi_after_phi_identity", "phi_after_psi_identity", "psi_multiplicative",
                       "phi_multiplicative"})
        if (j["iso"][key] != true) bad.push_back(tag + " " + key);
      if (j["simple"] != k.simple) bad.push_back(tag + " verdict");
      if (k.c.is_field()) {
        auto const& b = j["skew"]["bruteforce"];
        if (b["ran"] != true || b["simple"] != j["simple"]) bad.push_back(tag + " bruteforce disagrees");
      } else if (j["witness"]["proper"] != true || j["witness"]["two_sided"] != true) {
        bad.push_back(tag + " no scalar ideal");
      }
      if (r.exit != exit_code::ok) bad.push_back(tag + " report checks");
    }
    return {bad.empty(), bad.empty() ? fmt::format("{} groupoid/carrier cases", cases.size()) : bad.front()};
  });

  report(7, "dynamics: free => principal, minimal <=> S-simple, groupoid correspondences", [&]() -> Outcome {
    std::size_t fails = 0, free = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      auto const& a = corpus[i].ring.action();
      bool f = is_topologically_free(a).free;
      if (f) ++free;
      if (f && !is_topologically_principal(a).principal) ++fails;
      if (is_minimal(a).minimal != crit[i].s_simple) ++fails;
    }
    std::size_t groupoids = 0;
    std::vector<Groupoid> gs{pair_groupoid(2), pair_groupoid(3), unit_groupoid(3), cyclic_group_groupoid(2)};
    for (auto const& name : gallery_names()) {
      auto e = gallery_entry(name);
      if (detect_kind(e.input) == InputKind::groupoid) gs.push_back(groupoid_from_json(e.input));
    }
    for (auto const& g : gs) {
      ++groupoids;
      auto ga = compact_bisections(g);
      SkewRing r(theta_of_bisections(g, ga), Carrier::gf(2));
      auto p = groupoid_properties(g);
      if (p.minimal != r.s_simple().s_simple) ++fails;
      if (p.effective != r.max_commutative().maximal) ++fails;
    }
    return {fails == 0, fmt::format("{} runs ({} free), {} groupoids, {} failures", corpus.size(), free, groupoids, fails)};
  });

  report(8, "analyze is byte-identical across runs", [&]() -> Outcome {
    std::size_t inputs = 0, differ = 0;
    auto twice = [&](Json const& input, AnalyzeOptions const& opt) {
      ++inputs;
      if (analyze_json(input, opt).json.dump(2) != analyze_json(input, opt).json.dump(2)) ++differ;
    };
    for (auto const& name : gallery_names()) {
      auto e = gallery_entry(name);
      AnalyzeOptions opt;
      opt.carrier = Carrier::parse(e.carrier);
      twice(e.input, opt);
    }
    CorpusOptions co;
    co.count = 10;
    co.seed = 99;
    for (auto const& e : generate_corpus(co)) {
      AnalyzeOptions opt;
      opt.seed = 5;
      twice(to_json(e.action), opt);
    }
    return {differ == 0, fmt::format("{} inputs, {} differing reports", inputs, differ)};
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed" : fmt::format("{} criteria failed", failures).c_str());
  return failures == 0 ? 0 : 1;
}
