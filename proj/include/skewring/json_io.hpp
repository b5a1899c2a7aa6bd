#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "skewring/action.hpp"
#include "skewring/skew.hpp"
#include "skewring/steinberg.hpp"

namespace skewring {

using Json = nlohmann::ordered_json;

/// Parses text; syntax errors become ParseError with the byte position.
Json parse_json_text(std::string const& text);

enum class InputKind { semigroup, action, groupoid };
InputKind detect_kind(Json const& j);

InverseSemigroup semigroup_from_json(Json const& j);
Space space_from_json(Json const& j, std::optional<std::size_t> window = std::nullopt);
/// A bare array of 1-based points, or {"points": [...], "tail": bool, "infinity": bool}.
/// "infinity" defaults to "tail".
PointSet pointset_from_json(Space const& x, Json const& j);
PartialAction action_from_json(Json const& j, std::optional<std::size_t> window = std::nullopt);
Groupoid groupoid_from_json(Json const& j);
Scalar scalar_from_json(Carrier c, Json const& j);
LcFun lcfun_from_json(Space const& x, Carrier c, Json const& j);
SkewElement skew_from_json(SkewRing const& ring, Json const& j);

Json to_json(InverseSemigroup const& s);
Json to_json(Space const& x);
Json to_json(Space const& x, PointSet const& p);
Json to_json(PartialAction const& a);
Json to_json(Groupoid const& g);
Json to_json(Scalar const& s);
Json to_json(LcFun const& f);
Json to_json(SkewRing const& ring, SkewElement const& x);

}  // namespace skewring
