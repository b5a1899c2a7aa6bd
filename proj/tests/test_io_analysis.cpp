#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "skewring/analysis.hpp"
#include "skewring/corpus.hpp"
#include "skewring/diagnostic.hpp"
#include "skewring/gallery.hpp"

using namespace skewring;

namespace {

Json load(std::string const& name) {
  std::ifstream in(std::string(SKEWRING_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

void collect_leaves(Json const& j, std::vector<std::string>& out) {
  if (j.is_object()) {
    for (auto const& [k, v] : j.items()) collect_leaves(v, out);
  } else if (j.is_array() && !j.empty() && j.front().is_object() && j.front().size() > 2) {
    for (auto const& v : j) collect_leaves(v, out);
  } else {
    out.push_back(j.is_string() ? j.get<std::string>() : j.dump());
  }
}

}  // namespace

TEST_CASE("parse errors carry a position; empty element list is a parse error") {
  try {
    load("broken.json");
    FAIL("parsed");
  } catch (ParseError const& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  CHECK_THROWS_AS(semigroup_from_json(load("empty_elements.json")), ParseError);
}

TEST_CASE("verify: snake table valid, left-zero invalid with witness, cover failure") {
  auto ok = verify_json(load("snake_semigroup.json"));
  CHECK(ok.exit == exit_code::ok);
  CHECK(ok.json["valid"] == true);
  auto bad = verify_json(load("left_zero.json"));
  CHECK(bad.exit == exit_code::invalid);
  CHECK(bad.json["axiom"] == "inverse");
  CHECK(bad.json["witness"][0] == "a");
  auto cover = verify_json(load("not_cover.json"));
  CHECK(cover.exit == exit_code::invalid);
  CHECK(cover.json["axiom"] == "cover");
}

TEST_CASE("JSON round trips") {
  auto sn = snake_action(4);
  CHECK(to_json(action_from_json(to_json(sn))).dump() == to_json(sn).dump());
  auto file = action_from_json(load("snake_w4.json"));
  CHECK(to_json(file).dump() == to_json(sn).dump());
  auto g = pair_groupoid(3);
  CHECK(to_json(groupoid_from_json(to_json(g))).dump() == to_json(g).dump());
  CHECK(to_json(groupoid_from_json(load("pair2.json"))).dump() == to_json(pair_groupoid(2)).dump());
  auto x = Space::omega_plus(3);
  auto q = Carrier::rationals();
  PointSet s = x.full();
  s.reset(0);
  auto f = LcFun::indicator(x, q, s, Scalar(q, 1, 3));
  CHECK(lcfun_from_json(x, q, to_json(f)) == f);
}

TEST_CASE("window override must agree with the file") {
  auto j = load("snake_w4.json");
  CHECK_NOTHROW(action_from_json(j, 4));
  CHECK_THROWS_AS(action_from_json(j, 5), ParseError);
}

TEST_CASE("analyze snake window 4 over GF(2)") {
  AnalyzeOptions opt;
  auto r = analyze_json(load("snake_w4.json"), opt);
  CHECK(r.exit == exit_code::ok);
  CHECK(r.json["minimal"] == false);
  CHECK(r.json["principal"] == true);
  CHECK(r.json["free"] == false);
  CHECK(r.json["max_commutative"] == false);
  CHECK(r.json["simple"] == false);
  CHECK(r.json["mode"] == "bruteforce");
  CHECK(r.json["witness"]["tau_vanishes"] == true);
  CHECK(r.json["witness"]["meets_diagonal"] == false);
  auto const& el = r.json["elements"];
  REQUIRE(el.size() == 2);
  CHECK(el[0]["in_diagonal_span"] == false);
  CHECK(el[0]["in_diagonal_germs"] == false);
  CHECK(el[1]["zero_mod_N_span"] == false);
  CHECK(el[1]["tau"] == Json::array());
}

TEST_CASE("analyze Z/2 translation over GF(3): everything true") {
  AnalyzeOptions opt;
  opt.carrier = Carrier::gf(3);
  auto r = analyze_json(load("z2_translation.json"), opt);
  CHECK(r.exit == exit_code::ok);
  for (auto k : {"minimal", "principal", "free", "s_simple", "max_commutative", "simple"}) CHECK(r.json[k] == true);
  CHECK(r.json["witness"].is_null());
}

TEST_CASE("analyze P_2 over GF(2)") {
  AnalyzeOptions opt;
  auto r = analyze_json(load("pair2.json"), opt);
  CHECK(r.exit == exit_code::ok);
  CHECK(r.json["effective"] == true);
  CHECK(r.json["minimal"] == true);
  CHECK(r.json["simple"] == true);
  CHECK(r.json["iso"]["psi_multiplicative"] == true);
}

TEST_CASE("non-field carrier on an action: topological verdicts only") {
  AnalyzeOptions opt;
  opt.carrier = Carrier::zmod(4);
  auto r = analyze_action(translation_action(2), opt);
  CHECK(r.exit == exit_code::ok);
  CHECK(r.json["simple"].is_null());
  CHECK(r.json["minimal"] == true);
}

TEST_CASE("require-bruteforce reports a cap exit") {
  AnalyzeOptions opt;
  opt.bruteforce_cap = 2;
  opt.require_bruteforce = true;
  auto r = analyze_action(snake_action(4), opt);
  CHECK(r.exit == exit_code::cap_exceeded);
  CHECK(r.json["mode"] == "criterion");
  CHECK(r.json["simple"] == false);
}

TEST_CASE("gallery entries") {
  CHECK(gallery_names().size() == 6);
  for (auto const& name : gallery_names()) {
    auto e = gallery_entry(name);
    AnalyzeOptions opt;
    opt.carrier = Carrier::parse(e.carrier);
    auto r = analyze_json(e.input, opt);
    CHECK_MESSAGE(r.exit == exit_code::ok, name);
  }
  auto u = gallery_entry("unit-groupoid");
  AnalyzeOptions opt;
  auto r = analyze_json(u.input, opt);
  CHECK(r.json["minimal"] == false);
  CHECK(r.json["witness"]["orbit"].size() == 1);
  auto z4 = gallery_entry("z4-coefficients");
  opt.carrier = Carrier::parse(z4.carrier);
  r = analyze_json(z4.input, opt);
  CHECK(r.json["simple"] == false);
  CHECK(r.json["field"] == false);
  CHECK(r.json["witness"]["ideal"] == "2*A_R");
  try {
    gallery_entry("nope");
    FAIL("accepted");
  } catch (ParseError const& e) {
    CHECK(std::string(e.what()).find("pair-groupoid") != std::string::npos);
  }
  CHECK(gallery_entry("snake", 3).input["space"]["window"] == 3);
}

TEST_CASE("text output shows every JSON leaf") {
  AnalyzeOptions opt;
  auto r = analyze_action(snake_action(3), opt);
  auto text = render_text(r.json);
  std::vector<std::string> leaves;
  collect_leaves(r.json, leaves);
  for (auto const& l : leaves) CHECK_MESSAGE(text.find(l) != std::string::npos, l);
}

TEST_CASE("corpus is deterministic, distinct and within bounds") {
  CorpusOptions opt;
  opt.count = 25;
  auto a = generate_corpus(opt);
  auto b = generate_corpus(opt);
  REQUIRE(a.size() == 25);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto ja = to_json(a[i].action).dump();
    CHECK(ja == to_json(b[i].action).dump());
    CHECK(seen.insert(ja).second);
    CHECK(a[i].action.semigroup().size() <= 6);
    CHECK(a[i].action.space().size() <= 5);
  }
  opt.seed = 8;
  CHECK(to_json(generate_corpus(opt).front().action).dump() != to_json(a.front().action).dump());
}
