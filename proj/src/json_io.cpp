#include "skewring/json_io.hpp"

#include <fmt/format.h>

#include "skewring/diagnostic.hpp"

namespace skewring {

namespace {

Json const& need(Json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(fmt::format("missing field '{}'", key));
  return j.at(key);
}

std::string as_label(Json const& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("expected a label (string or integer), got " + j.dump());
}

std::vector<std::string> label_list(Json const& j, char const* what) {
  if (!j.is_array()) throw ParseError(fmt::format("'{}' must be an array", what));
  std::vector<std::string> out;
  for (auto const& e : j) out.push_back(as_label(e));
  return out;
}

std::vector<std::string> label_map(Json const& j, std::vector<std::string> const& keys, char const* what) {
  if (!j.is_object()) throw ParseError(fmt::format("'{}' must be an object keyed by arrow", what));
  std::vector<std::string> out;
  for (auto const& k : keys) {
    if (!j.contains(k)) throw ParseError(fmt::format("'{}' has no entry for '{}'", what, k));
    out.push_back(as_label(j.at(k)));
  }
  return out;
}

std::size_t point_from_json(Space const& x, Json const& j) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (x.is_omega() && s == "tail") return x.tail();
    if (x.is_omega() && s == "inf") return x.infinity();
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used == s.size()) return point_from_json(x, Json(v));
    } catch (std::exception const&) {
    }
    throw ParseError("unknown point '" + s + "'");
  }
  if (!j.is_number_integer()) throw ParseError("point must be an integer, got " + j.dump());
  long v = j.get<long>();
  std::size_t limit = x.is_omega() ? x.window() : x.size();
  if (v < 1 || static_cast<std::size_t>(v) > limit)
    throw ParseError(fmt::format("point {} outside 1..{}", v, limit));
  return static_cast<std::size_t>(v - 1);
}

}  // namespace

Json parse_json_text(std::string const& text) {
  try {
    return Json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(fmt::format("JSON syntax error at byte {}: {}", e.byte, e.what()));
  }
}

InputKind detect_kind(Json const& j) {
  if (!j.is_object()) throw ParseError("top level must be a JSON object");
  if (j.contains("semigroup")) return InputKind::action;
  if (j.contains("arrows")) return InputKind::groupoid;
  if (j.contains("table") || j.contains("elements")) return InputKind::semigroup;
  throw ParseError("cannot tell the input kind: expected 'semigroup', 'arrows' or 'table'");
}

InverseSemigroup semigroup_from_json(Json const& j) {
  auto labels = label_list(need(j, "elements"), "elements");
  if (labels.empty()) throw ParseError("empty element list");
  auto const& t = need(j, "table");
  if (!t.is_array()) throw ParseError("'table' must be an array of rows");
  auto index_of = [&](Json const& e) -> std::size_t {
    if (e.is_number_integer()) {
      long v = e.get<long>();
      if (v < 0 || static_cast<std::size_t>(v) >= labels.size())
        throw ParseError(fmt::format("table index {} out of range", v));
      return static_cast<std::size_t>(v);
    }
    auto l = as_label(e);
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return i;
    throw ParseError("table refers to unknown element '" + l + "'");
  };
  std::vector<std::vector<std::size_t>> table;
  for (auto const& row : t) {
    if (!row.is_array()) throw ParseError("table rows must be arrays");
    std::vector<std::size_t> r;
    for (auto const& e : row) r.push_back(index_of(e));
    table.push_back(std::move(r));
  }
  std::optional<std::size_t> unit;
  if (j.contains("unit") && !j.at("unit").is_null()) {
    auto l = as_label(j.at("unit"));
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) unit = i;
    if (!unit) throw ParseError("unit '" + l + "' is not an element");
  }
  std::size_t cap = InverseSemigroup::default_cap;
  if (j.contains("size_cap")) cap = j.at("size_cap").get<std::size_t>();
  return InverseSemigroup::from_table(std::move(labels), std::move(table), unit, cap);
}

Space space_from_json(Json const& j, std::optional<std::size_t> window) {
  auto kind = need(j, "kind").get<std::string>();
  if (kind == "finite") return Space::finite(need(j, "n").get<std::size_t>());
  if (kind == "omega_plus") {
    std::optional<std::size_t> w;
    if (j.contains("window")) w = j.at("window").get<std::size_t>();
    if (w && window && *w != *window)
      throw ParseError(fmt::format("window {} in the input disagrees with --window {}", *w, *window));
    if (!w) w = window;
    if (!w) throw ParseError("omega_plus space needs a window (in the input or via --window)");
    return Space::omega_plus(*w);
  }
  throw ParseError("unknown space kind '" + kind + "'");
}

PointSet pointset_from_json(Space const& x, Json const& j) {
  PointSet s = x.empty();
  Json const* pts = &j;
  if (j.is_object()) {
    pts = &need(j, "points");
    bool tail = j.value("tail", false);
    bool inf = j.value("infinity", tail);
    if ((tail || inf) && !x.is_omega()) throw ParseError("tail/infinity flags only apply to omega_plus spaces");
    if (tail) s.set(x.tail());
    if (inf) s.set(x.infinity());
  }
  if (!pts->is_array()) throw ParseError("point set must be an array of points");
  for (auto const& p : *pts) s.set(point_from_json(x, p));
  return s;
}

PartialAction action_from_json(Json const& j, std::optional<std::size_t> window) {
  auto s = semigroup_from_json(need(j, "semigroup"));
  auto x = space_from_json(need(j, "space"), window);
  auto const& doms = need(j, "domains");
  auto const& maps = need(j, "maps");
  ActionData d;
  for (std::size_t e = 0; e < s.size(); ++e) {
    auto const& l = s.label(e);
    if (!doms.contains(l)) throw ParseError("no domain given for '" + l + "'");
    d.domains.push_back(pointset_from_json(x, doms.at(l)));
  }
  for (std::size_t e = 0; e < s.size(); ++e) {
    auto const& l = s.label(e);
    if (!maps.contains(l)) throw ParseError("no map given for '" + l + "'");
    auto const& m = maps.at(l);
    PointSet const& src = d.domains[s.star(e)];
    std::vector<long> row(x.size(), -1);
    bool identity = m.is_string() && m.get<std::string>() == "identity";
    if (!identity) {
      if (!m.is_object()) throw ParseError("map for '" + l + "' must be \"identity\" or an object");
      if (m.contains("tail") && m.at("tail") != "identity")
        throw ParseError("only \"identity\" tail behaviour is supported (map for '" + l + "')");
      auto const& pts = m.contains("points") ? m.at("points") : Json::object();
      if (!pts.is_object()) throw ParseError("'points' of map '" + l + "' must be an object");
      for (auto const& [from, to] : pts.items()) {
        std::size_t p = point_from_json(x, Json(from));
        row[p] = static_cast<long>(point_from_json(x, to));
      }
    } else {
      for (auto p : members(src)) row[p] = static_cast<long>(p);
    }
    if (x.is_omega()) {
      // beyond the window every map is the identity
      if (src[x.tail()]) row[x.tail()] = static_cast<long>(x.tail());
      if (src[x.infinity()]) row[x.infinity()] = static_cast<long>(x.infinity());
    }
    d.maps.push_back(std::move(row));
  }
  return PartialAction(std::move(s), std::move(x), std::move(d));
}

Groupoid groupoid_from_json(Json const& j) {
  auto arrows = label_list(need(j, "arrows"), "arrows");
  auto src = label_map(need(j, "src"), arrows, "src");
  auto rng = label_map(need(j, "rng"), arrows, "rng");
  auto inv = label_map(need(j, "inv"), arrows, "inv");
  std::vector<Groupoid::Composition> comp;
  if (j.contains("compose")) {
    for (auto const& t : j.at("compose")) {
      if (!t.is_array() || t.size() != 3) throw ParseError("compose entries must be [c, d, cd]");
      comp.push_back({as_label(t[0]), as_label(t[1]), as_label(t[2])});
    }
  }
  return Groupoid::create(std::move(arrows), src, rng, inv, comp);
}

Scalar scalar_from_json(Carrier c, Json const& j) {
  if (j.is_number_integer()) return Scalar(c, j.get<std::int64_t>());
  if (j.is_string()) {
    auto s = j.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Scalar(c, std::stoll(s));
      return Scalar(c, std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (std::invalid_argument const&) {
      throw ParseError("malformed scalar '" + s + "'");
    }
  }
  throw ParseError("scalar must be an integer or \"p/q\", got " + j.dump());
}

LcFun lcfun_from_json(Space const& x, Carrier c, Json const& j) {
  if (!j.is_array()) throw ParseError("function must be an array of {piece, value}");
  LcFun f(x, c);
  PointSet used = x.empty();
  for (auto const& piece : j) {
    PointSet p = pointset_from_json(x, need(piece, "piece"));
    if (p.intersects(used)) throw ParseError("function pieces overlap");
    used |= p;
    if (!x.is_compact_open(p)) throw ParseError("function piece is not compact-open: " + format_set(x, p));
    f += LcFun::indicator(x, c, p, scalar_from_json(c, need(piece, "value")));
  }
  return f;
}

SkewElement skew_from_json(SkewRing const& ring, Json const& j) {
  if (!j.is_array()) throw ParseError("skew element must be an array of {s, coeff}");
  SkewElement out;
  for (auto const& t : j) {
    std::size_t s = ring.semigroup().index(as_label(need(t, "s")));
    out += ring.term(s, lcfun_from_json(ring.space(), ring.carrier(), need(t, "coeff")));
  }
  return out;
}

Json to_json(InverseSemigroup const& s) {
  Json j;
  j["elements"] = s.labels();
  Json t = Json::array();
  for (auto const& row : s.table()) t.push_back(row);
  j["table"] = t;
  if (s.unit()) j["unit"] = s.label(*s.unit());
  return j;
}

Json to_json(Space const& x) {
  Json j;
  if (x.is_omega()) {
    j["kind"] = "omega_plus";
    j["window"] = x.window();
  } else {
    j["kind"] = "finite";
    j["n"] = x.size();
  }
  return j;
}

Json to_json(Space const& x, PointSet const& p) {
  Json pts = Json::array();
  for (auto q : members(p))
    if (!x.is_omega() || q < x.window()) pts.push_back(q + 1);
  if (!x.is_omega()) return pts;
  Json j;
  j["points"] = pts;
  j["tail"] = static_cast<bool>(p[x.tail()]);
  if (p[x.tail()] != p[x.infinity()]) j["infinity"] = static_cast<bool>(p[x.infinity()]);
  return j;
}

Json to_json(PartialAction const& a) {
  auto const& S = a.semigroup();
  auto const& x = a.space();
  Json j;
  j["semigroup"] = to_json(S);
  j["space"] = to_json(x);
  Json doms = Json::object(), maps = Json::object();
  for (std::size_t s = 0; s < S.size(); ++s) {
    doms[S.label(s)] = to_json(x, a.domain(s));
    Json pts = Json::object();
    for (auto p : members(a.domain(S.star(s)))) {
      if (x.is_omega() && p >= x.window()) continue;
      pts[x.point_name(p)] = a.theta(s, p) + 1;
    }
    Json m;
    m["points"] = pts;
    if (x.is_omega()) m["tail"] = "identity";
    maps[S.label(s)] = m;
  }
  j["domains"] = doms;
  j["maps"] = maps;
  return j;
}

Json to_json(Groupoid const& g) {
  Json j;
  Json arrows = Json::array(), src = Json::object(), rng = Json::object(), inv = Json::object(),
       comp = Json::array();
  for (std::size_t a = 0; a < g.size(); ++a) {
    arrows.push_back(g.label(a));
    src[g.label(a)] = g.label(g.src(a));
    rng[g.label(a)] = g.label(g.rng(a));
    inv[g.label(a)] = g.label(g.inv(a));
  }
  for (std::size_t c = 0; c < g.size(); ++c)
    for (std::size_t d = 0; d < g.size(); ++d) {
      if (g.is_unit(c) || g.is_unit(d)) continue;
      if (auto cd = g.compose(c, d)) comp.push_back({g.label(c), g.label(d), g.label(*cd)});
    }
  j["arrows"] = arrows;
  j["src"] = src;
  j["rng"] = rng;
  j["inv"] = inv;
  j["compose"] = comp;
  return j;
}

Json to_json(Scalar const& s) {
  if (s.denominator() == 1) return s.numerator();
  return s.to_string();
}

Json to_json(LcFun const& f) {
  Json out = Json::array();
  for (auto const& [set, v] : f.pieces()) {
    Json p;
    p["piece"] = to_json(f.space(), set);
    p["value"] = to_json(v);
    out.push_back(p);
  }
  return out;
}

Json to_json(SkewRing const& ring, SkewElement const& x) {
  Json out = Json::array();
  for (auto const& t : x.terms()) {
    Json e;
    e["s"] = ring.semigroup().label(t.s);
    e["coeff"] = to_json(t.coeff);
    out.push_back(e);
  }
  return out;
}

}  // namespace skewring
