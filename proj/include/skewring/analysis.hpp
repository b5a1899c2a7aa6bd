#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewring/json_io.hpp"

namespace skewring {

struct AnalyzeOptions {
  Carrier carrier = Carrier::gf(2);
  std::size_t bruteforce_cap = 14;
  std::size_t enumeration_cap = 16;
  std::size_t bisection_cap = 16;
  std::uint64_t seed = 1;
  std::size_t sample = 200;  // random elements for the engine agreement check
  bool require_bruteforce = false;
  bool timings = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid = 1;
inline constexpr int property_failure = 2;
inline constexpr int cap_exceeded = 3;
}  // namespace exit_code

struct Report {
  Json json;
  int exit = exit_code::ok;
};

Report analyze_action(PartialAction const& a, AnalyzeOptions const& opt, Json const& elements = Json());
Report analyze_groupoid(Groupoid const& g, AnalyzeOptions const& opt, std::vector<ArrowSet> const& family = {});
Report analyze_json(Json const& input, AnalyzeOptions const& opt, std::optional<std::size_t> window = std::nullopt);
Report verify_json(Json const& input, std::optional<std::size_t> window = std::nullopt);

/// Indented "key: value" rendering of a report; shows every field of the JSON.
std::string render_text(Json const& report);

/// Builds the element x = sum c_s delta_{ss*} - c from a centralizer element c
/// outside D. Its ideal is nonzero with tau vanishing on it.
Vector centralizer_ideal_generator(SkewRing const& ring, Vector const& c);

}  // namespace skewring
