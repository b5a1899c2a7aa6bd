#include "skewring/analysis.hpp"

#include <chrono>
#include <random>

#include <fmt/format.h>

#include "skewring/diagnostic.hpp"
#include "skewring/simplicity.hpp"

namespace skewring {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json element_json(SkewRing const& ring, Vector const& q) { return to_json(ring, ring.from_L(ring.lift(q))); }

Vector random_vector(std::mt19937_64& rng, Carrier c, std::size_t n) {
  Vector v = zero_vector(c, n);
  std::int64_t const range = c.is_finite() ? c.modulus() : 5;
  for (auto& x : v)
    if (rng() % 2 == 0) x = Scalar(c, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(range)) - (c.is_finite() ? 0 : 2));
  return v;
}

struct Agreement {
  std::size_t checked = 0;
  std::size_t disagreements = 0;
};

// Both engines on: every slice, every N generator, random vectors, random
// members of N, and each random vector minus its germ re-expansion.
Agreement engine_agreement(SkewRing const& ring, std::uint64_t seed, std::size_t sample) {
  Agreement a;
  auto check = [&](Vector const& v, std::optional<bool> expected_zero) {
    bool span = ring.in_N(v);
    bool germ = ring.germ_zero(v);
    ++a.checked;
    if (span != germ || (expected_zero && *expected_zero != span)) ++a.disagreements;
  };
  std::size_t const n = ring.dim_L();
  Carrier const c = ring.carrier();
  for (std::size_t i = 0; i < n; ++i) check(unit_vector(c, n, i), false);
  for (auto const& g : ring.n_generators()) check(g, true);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < sample; ++k) {
    Vector v = random_vector(rng, c, n);
    check(v, std::nullopt);
    Vector w = zero_vector(c, n);
    for (auto const& g : ring.n_generators())
      if (rng() % 3 == 0) axpy(w, Scalar(c, static_cast<std::int64_t>(1 + rng() % 2)), g);
    check(w, true);
    Vector d = v;
    axpy(d, -Scalar::one(c), ring.reexpand(ring.germ_normal_form(v)));
    check(d, true);
  }
  return a;
}

Json bruteforce_json(SkewRing const& ring, BruteForceResult const& bf) {
  Json j;
  j["ran"] = bf.ran;
  if (!bf.ran) {
    j["skipped"] = bf.skipped;
    return j;
  }
  j["vectors"] = bf.vectors;
  j["simple"] = bf.simple;
  j["all_ideals_meet_diagonal"] = bf.all_meet_diagonal;
  j["all_ideals_have_tau_support"] = bf.all_have_tau_support;
  if (bf.proper_ideal_generator) j["proper_ideal_generator"] = element_json(ring, *bf.proper_ideal_generator);
  if (bf.misses_diagonal) j["ideal_missing_diagonal_generator"] = element_json(ring, *bf.misses_diagonal);
  if (bf.tau_zero_ideal_generator) j["tau_zero_ideal_generator"] = element_json(ring, *bf.tau_zero_ideal_generator);
  return j;
}

bool all_true(Json const& checks) {
  for (auto const& [k, v] : checks.items())
    if (v.is_boolean() && !v.get<bool>()) return false;
  return true;
}

}  // namespace

Vector centralizer_ideal_generator(SkewRing const& ring, Vector const& c) {
  auto const& S = ring.semigroup();
  Vector lifted = ring.lift(c);
  Vector x = zero_vector(ring.carrier(), ring.dim_L());
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    if (lifted[i].is_zero()) continue;
    auto const& sl = ring.slices()[i];
    std::size_t ss = S.mul(sl.s, S.star(sl.s));
    x[*ring.slice_index(ss, sl.atom)] += lifted[i];
    x[i] -= lifted[i];
  }
  return ring.project(x);
}

Report analyze_action(PartialAction const& a, AnalyzeOptions const& opt, Json const& elements) {
  auto const t0 = Clock::now();
  Report rep;
  Json& j = rep.json;
  auto const& S = a.semigroup();
  auto const& X = a.space();
  Carrier const c = opt.carrier;

  j["kind"] = "action";
  j["carrier"] = c.name();
  {
    Json s;
    s["order"] = S.size();
    Json idem = Json::array();
    for (auto e : S.idempotents()) idem.push_back(S.label(e));
    s["idempotents"] = idem;
    s["group"] = S.is_group();
    j["semigroup"] = s;
  }
  j["space"] = to_json(X);

  auto minr = is_minimal(a, opt.enumeration_cap);
  auto pr = is_topologically_principal(a);
  auto fr = is_topologically_free(a);
  j["minimal"] = minr.minimal;
  j["principal"] = pr.principal;
  j["free"] = fr.free;
  j["s_simple"] = nullptr;
  j["max_commutative"] = nullptr;
  j["simple"] = nullptr;
  j["mode"] = "topological only";
  j["witness"] = nullptr;

  Json dyn;
  {
    Json m;
    m["value"] = minr.minimal;
    m["witness"] = minr.witness ? to_json(X, *minr.witness) : Json(nullptr);
    m["enumerated"] = minr.enumerated;
    dyn["minimal"] = m;
    Json p;
    p["value"] = pr.principal;
    Json certs = Json::array();
    for (auto const& cert : pr.certificates) {
      Json cj;
      cj["s"] = S.label(cert.s);
      cj["lambda"] = to_json(X, cert.lambda);
      cj["dense"] = cert.dense;
      certs.push_back(cj);
    }
    p["certificates"] = certs;
    p["global_lambda"] = to_json(X, pr.global_lambda);
    p["global_dense"] = pr.global_dense;
    dyn["principal"] = p;
    Json f;
    f["value"] = fr.free;
    if (!fr.free) {
      Json w;
      w["s"] = S.label(*fr.witness_s);
      w["point"] = X.point_name(*fr.witness_point);
      w["interior_of_fixed"] = to_json(X, X.interior(fixed_set(a, *fr.witness_s)));
      w["idempotent_witnessed"] = to_json(X, idempotent_witnessed(a, *fr.witness_s));
      f["witness"] = w;
    } else {
      f["witness"] = nullptr;
    }
    dyn["free"] = f;
  }
  j["dynamics"] = dyn;

  Json checks;
  checks["free_implies_principal"] = !fr.free || pr.principal;
  checks["principal_per_element_iff_global"] = pr.principal == pr.global_dense;
  if (minr.enumerated) checks["minimal_orbit_closure_iff_open_scan"] = minr.agrees;
  Json notes = Json::array();

  std::optional<BruteForceResult> bf_kept;
  if (!c.is_field()) {
    notes.push_back("carrier " + c.name() + " is not a field: algebraic verdicts are not computed");
  } else {
    SkewRing ring(a, c);
    auto const t1 = Clock::now();
    auto ss = ring.s_simple();
    auto mc = ring.max_commutative();
    bool const crit = ss.s_simple && mc.maximal;
    auto bf = brute_force(ring, opt.bruteforce_cap);
    auto agree = engine_agreement(ring, opt.seed, opt.sample);
    double const algebra_ms = ms_since(t1);

    j["s_simple"] = ss.s_simple;
    j["max_commutative"] = mc.maximal;
    j["simple"] = bf.ran ? bf.simple : crit;
    j["mode"] = bf.ran ? "bruteforce" : "criterion";

    Json alg;
    alg["dim_L"] = ring.dim_L();
    alg["dim_N"] = ring.dim_N();
    alg["dim"] = ring.dim();
    alg["dim_diagonal"] = mc.dim_diagonal;
    alg["dim_centralizer"] = mc.dim_centralizer;
    Json sj;
    sj["value"] = ss.s_simple;
    sj["witness_open"] = ss.witness ? to_json(X, *ss.witness) : Json(nullptr);
    alg["s_simple"] = sj;
    Json mj;
    mj["value"] = mc.maximal;
    mj["witness"] = mc.witness ? element_json(ring, *mc.witness) : Json(nullptr);
    alg["max_commutative"] = mj;
    alg["criterion_simple"] = crit;
    alg["bruteforce"] = bruteforce_json(ring, bf);
    Json ea;
    ea["checked"] = agree.checked;
    ea["disagreements"] = agree.disagreements;
    alg["engine_agreement"] = ea;

    std::size_t phi_failures = 0;
    for (auto const& atom : X.atoms()) {
      auto f = LcFun::indicator(X, c, atom);
      if (!(ring.tau(ring.phi(f)) == f)) ++phi_failures;
    }
    alg["tau_after_phi_identity"] = phi_failures == 0;
    j["algebra"] = alg;

    checks["minimal_iff_s_simple"] = minr.minimal == ss.s_simple;
    checks["engine_agreement"] = agree.disagreements == 0;
    checks["tau_after_phi_identity"] = phi_failures == 0;
    if (bf.ran) {
      checks["simple_iff_s_simple_and_max_commutative"] = bf.simple == crit;
      checks["max_commutative_iff_ideals_meet_diagonal"] = mc.maximal == bf.all_meet_diagonal;
      checks["simple_iff_minimal_principal_tau_support"] =
          bf.simple == (minr.minimal && pr.principal && bf.all_have_tau_support);
      checks["simple_implies_s_simple"] = !bf.simple || ss.s_simple;
    } else {
      notes.push_back("bruteforce skipped: " + bf.skipped);
    }
    if (S.is_group()) checks["group_free_implies_max_commutative"] = !is_group_topologically_free(a) || mc.maximal;

    if (!j["simple"].get<bool>()) {
      Json w;
      if (mc.witness) {
        Vector x = centralizer_ideal_generator(ring, *mc.witness);
        auto ideal = ring.ideal_generated_by(x);
        bool tau_vanishes = true;
        for (auto const& row : ideal.rows())
          if (!ring.tau_q(row).is_zero()) tau_vanishes = false;
        w["kind"] = "ideal";
        w["generator"] = element_json(ring, x);
        w["ideal_dim"] = ideal.rank();
        w["meets_diagonal"] = intersection_dim(ideal, ring.diagonal()) > 0;
        w["tau_vanishes"] = tau_vanishes;
        checks["centralizer_ideal_is_proper"] = ideal.rank() > 0 && ideal.rank() < ring.dim() && tau_vanishes;
      } else if (ss.witness) {
        w["kind"] = "invariant_open";
        w["set"] = to_json(X, *ss.witness);
      } else if (bf.proper_ideal_generator) {
        w["kind"] = "ideal";
        w["generator"] = element_json(ring, *bf.proper_ideal_generator);
      }
      j["witness"] = w;
    }

    if (elements.is_array()) {
      Json out = Json::array();
      for (auto const& e : elements) {
        SkewElement x = skew_from_json(ring, e);
        Vector v = ring.to_L(x);
        Json r;
        r["element"] = to_json(ring, x);
        r["zero_mod_N_span"] = ring.in_N(v);
        r["zero_mod_N_germs"] = ring.germ_zero(v);
        r["in_diagonal_span"] = ring.in_diagonal_span(v);
        r["in_diagonal_germs"] = ring.in_diagonal_germs(v);
        r["tau"] = to_json(ring.tau(x));
        r["ideal_dim"] = ring.ideal_generated_by(ring.project(v)).rank();
        checks["element_engines_agree"] = (checks.value("element_engines_agree", true)) &&
                                          r["zero_mod_N_span"] == r["zero_mod_N_germs"] &&
                                          r["in_diagonal_span"] == r["in_diagonal_germs"];
        out.push_back(r);
      }
      j["elements"] = out;
    }
    if (opt.timings) j["timings_ms"] = {{"algebra", algebra_ms}};
    bf_kept = bf;
  }
  j["checks"] = checks;
  j["notes"] = notes;
  if (opt.timings) j["timings_ms"]["total"] = ms_since(t0);

  if (!all_true(checks))
    rep.exit = exit_code::property_failure;
  else if (opt.require_bruteforce && (!bf_kept || !bf_kept->ran))
    rep.exit = exit_code::cap_exceeded;
  return rep;
}

Report analyze_groupoid(Groupoid const& g, AnalyzeOptions const& opt, std::vector<ArrowSet> const& family) {
  auto const t0 = Clock::now();
  Report rep;
  Json& j = rep.json;
  Carrier const c = opt.carrier;
  auto ga = family.empty() ? compact_bisections(g, opt.bisection_cap) : generated_bisections(g, family);
  auto action = theta_of_bisections(g, ga);
  auto props = groupoid_properties(g);
  bool const verdict = props.effective && props.minimal && c.is_field();

  j["kind"] = "groupoid";
  j["carrier"] = c.name();
  j["model"] = ga.restricted ? "restricted model" : "full";
  j["arrows"] = g.size();
  j["units"] = g.units().size();
  j["bisections"] = ga.semigroup.size();
  j["effective"] = props.effective;
  j["minimal"] = props.minimal;
  j["field"] = c.is_field();
  j["simple"] = verdict;
  j["witness"] = nullptr;

  Json gp;
  {
    Json e;
    e["value"] = props.effective;
    e["witness"] = props.non_effective_witness ? Json(g.label(*props.non_effective_witness)) : Json(nullptr);
    gp["effective"] = e;
    Json m;
    m["value"] = props.minimal;
    Json w = nullptr;
    if (props.non_minimal_witness) {
      w = Json::array();
      for (auto p : members(*props.non_minimal_witness)) w.push_back(g.label(g.units()[p]));
    }
    m["witness"] = w;
    gp["minimal"] = m;
  }
  j["groupoid"] = gp;

  SkewRing ring(action, c);
  SteinbergIso iso(g, ga, ring);
  auto zero_mod_n = [&](Vector const& v) { return c.is_field() ? ring.in_N(v) : ring.germ_zero(v); };
  std::size_t const n = ring.dim_L();

  bool psi_kills_n = true;
  for (auto const& gen : ring.n_generators())
    if (!(iso.psi_L(gen) == zero_fun(g, c))) psi_kills_n = false;

  bool psi_phi = true;
  std::vector<SteinbergFun> tests;
  for (std::size_t a = 0; a < g.size(); ++a) {
    ArrowSet s(g.size());
    s.set(a);
    tests.push_back(arrow_indicator(g, c, s));
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t k = 0; k < 20; ++k) {
    auto f = zero_fun(g, c);
    for (auto& v : f.values) v = Scalar(c, static_cast<std::int64_t>(rng() % 4));
    tests.push_back(f);
  }
  for (auto const& f : tests)
    if (!(iso.psi(iso.phi(f)) == f)) psi_phi = false;

  bool phi_psi = true;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = unit_vector(c, n, i);
    Vector back = ring.to_L(iso.phi(iso.psi_L(v)));
    axpy(back, -Scalar::one(c), v);
    if (!zero_mod_n(back)) phi_psi = false;
  }

  bool psi_mult = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Vector vi = unit_vector(c, n, i), vk = unit_vector(c, n, k);
      if (!(iso.psi_L(ring.mul_L(vi, vk)) == convolve(g, iso.psi_L(vi), iso.psi_L(vk)))) psi_mult = false;
    }

  bool phi_mult = true;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) {
      Vector lhs = ring.to_L(iso.phi(convolve(g, tests[a], tests[b])));
      Vector rhs = ring.mul_L(ring.to_L(iso.phi(tests[a])), ring.to_L(iso.phi(tests[b])));
      axpy(lhs, -Scalar::one(c), rhs);
      if (!zero_mod_n(lhs)) phi_mult = false;
    }

  Json isoj;
  isoj["dim_L"] = n;
  isoj["dim_quotient"] = c.is_field() ? Json(ring.dim()) : Json(nullptr);
  isoj["psi_kills_N"] = psi_kills_n;
  isoj["psi_after_phi_identity"] = psi_phi;
  isoj["phi_after_psi_identity"] = phi_psi;
  isoj["psi_multiplicative"] = psi_mult;
  isoj["phi_multiplicative"] = phi_mult;
  isoj["equality_engine"] = c.is_field() ? "span" : "germs";
  j["iso"] = isoj;

  Json checks;
  checks["iso_round_trip"] = psi_kills_n && psi_phi && phi_psi && psi_mult && phi_mult;
  if (c.is_field()) checks["iso_dimension"] = ring.dim() == g.size();
  auto amin = is_minimal(action, opt.enumeration_cap);
  checks["minimal_iff_action_minimal"] = props.minimal == amin.minimal;
  Json notes = Json::array();
  if (ga.restricted) notes.push_back("bisections generated from a family: restricted model");

  std::optional<BruteForceResult> bf_kept;
  if (c.is_field()) {
    auto ss = ring.s_simple();
    auto mc = ring.max_commutative();
    bool crit = ss.s_simple && mc.maximal;
    auto bf = brute_force(ring, opt.bruteforce_cap);
    Json sk;
    sk["s_simple"] = ss.s_simple;
    sk["max_commutative"] = mc.maximal;
    sk["criterion_simple"] = crit;
    sk["bruteforce"] = bruteforce_json(ring, bf);
    j["skew"] = sk;
    checks["minimal_iff_s_simple"] = props.minimal == ss.s_simple;
    checks["effective_iff_max_commutative"] = props.effective == mc.maximal;
    checks["simple_iff_criterion"] = verdict == crit;
    if (bf.ran)
      checks["simple_iff_bruteforce"] = verdict == bf.simple;
    else
      notes.push_back("bruteforce skipped: " + bf.skipped);
    if (!verdict) {
      Json w;
      if (!props.effective) {
        w["kind"] = "not effective";
        w["arrow"] = g.label(*props.non_effective_witness);
      } else {
        w["kind"] = "not minimal";
        w["orbit"] = gp["minimal"]["witness"];
      }
      j["witness"] = w;
    }
    bf_kept = bf;
  } else {
    j["skew"] = nullptr;
    notes.push_back("carrier " + c.name() + " is not a field");
    if (auto w = scalar_ideal_witness(g, c)) {
      Json wj;
      wj["kind"] = "scalar ideal";
      wj["ideal"] = fmt::format("{}*A_R", w->p);
      wj["nonzero"] = w->nonzero;
      wj["proper"] = w->proper;
      wj["two_sided"] = w->two_sided;
      j["witness"] = wj;
      checks["scalar_ideal_is_proper"] = w->nonzero && w->proper && w->two_sided;
    }
  }
  j["checks"] = checks;
  j["notes"] = notes;
  if (opt.timings) j["timings_ms"] = {{"total", ms_since(t0)}};

  if (!all_true(checks))
    rep.exit = exit_code::property_failure;
  else if (opt.require_bruteforce && c.is_field() && (!bf_kept || !bf_kept->ran))
    rep.exit = exit_code::cap_exceeded;
  return rep;
}

Report analyze_json(Json const& input, AnalyzeOptions const& opt, std::optional<std::size_t> window) {
  switch (detect_kind(input)) {
    case InputKind::action:
      return analyze_action(action_from_json(input, window), opt, input.contains("elements") ? input.at("elements") : Json());
    case InputKind::groupoid: {
      auto g = groupoid_from_json(input);
      std::vector<ArrowSet> family;
      if (input.contains("bisections"))
        for (auto const& b : input.at("bisections")) {
          ArrowSet s(g.size());
          for (auto const& a : b) s.set(g.index(a.get<std::string>()));
          family.push_back(s);
        }
      return analyze_groupoid(g, opt, family);
    }
    case InputKind::semigroup: {
      auto s = semigroup_from_json(input);
      Report r = analyze_action(munn_action(s), opt);
      r.json["notes"].push_back("semigroup input: analyzed through its Munn representation");
      return r;
    }
  }
  throw ParseError("unreachable input kind");
}

Report verify_json(Json const& input, std::optional<std::size_t> window) {
  Report rep;
  Json& j = rep.json;
  try {
    switch (detect_kind(input)) {
      case InputKind::semigroup: {
        auto s = semigroup_from_json(input);
        j["kind"] = "semigroup";
        j["valid"] = true;
        j["order"] = s.size();
        Json idem = Json::array(), star = Json::object();
        for (auto e : s.idempotents()) idem.push_back(s.label(e));
        for (std::size_t i = 0; i < s.size(); ++i) star[s.label(i)] = s.label(s.star(i));
        j["idempotents"] = idem;
        j["star"] = star;
        break;
      }
      case InputKind::action: {
        auto a = action_from_json(input, window);
        j["kind"] = "action";
        j["valid"] = true;
        j["points"] = a.space().size();
        break;
      }
      case InputKind::groupoid: {
        auto g = groupoid_from_json(input);
        j["kind"] = "groupoid";
        j["valid"] = true;
        j["arrows"] = g.size();
        j["units"] = g.units().size();
        Json iso = Json::array();
        for (auto a : g.isotropy()) iso.push_back(g.label(a));
        j["isotropy"] = iso;
        break;
      }
    }
  } catch (ValidationError const& e) {
    j["valid"] = false;
    j["axiom"] = e.diagnostic().axiom;
    j["message"] = e.diagnostic().message;
    j["witness"] = e.diagnostic().witness;
    rep.exit = exit_code::invalid;
  }
  return rep;
}

namespace {

void render(Json const& j, std::string const& indent, std::string& out) {
  for (auto const& [k, v] : j.items()) {
    if (v.is_object()) {
      out += indent + k + ":\n";
      render(v, indent + "  ", out);
    } else if (v.is_array() && !v.empty() && v.front().is_object() && v.front().size() > 2) {
      out += indent + k + ":\n";
      for (auto const& item : v) {
        out += indent + "  -\n";
        render(item, indent + "    ", out);
      }
    } else {
      out += indent + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
  }
}

}  // namespace

std::string render_text(Json const& report) {
  std::string out;
  render(report, "", out);
  return out;
}

}  // namespace skewring
