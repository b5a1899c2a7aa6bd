#include "skewring/gallery.hpp"

#include <fmt/format.h>

#include "skewring/diagnostic.hpp"

namespace skewring {

PartialAction translation_action(std::size_t n) {
  auto s = cyclic_group(n);
  auto x = Space::finite(n);
  ActionData d;
  for (std::size_t k = 0; k < n; ++k) {
    d.domains.push_back(x.full());
    std::vector<long> m(n);
    for (std::size_t p = 0; p < n; ++p) m[p] = static_cast<long>((p + k) % n);
    d.maps.push_back(std::move(m));
  }
  return PartialAction(std::move(s), std::move(x), std::move(d));
}

std::vector<std::string> gallery_names() {
  return {"snake", "pair-groupoid", "z2-translation", "munn-semilattice", "z4-coefficients", "unit-groupoid"};
}

GalleryEntry gallery_entry(std::string const& name, std::optional<std::size_t> window) {
  if (name == "snake") {
    std::size_t w = window.value_or(4);
    return {name, fmt::format("two-headed snake on the one-point compactification, window {}", w), "gf:2",
            to_json(snake_action(w))};
  }
  if (name == "pair-groupoid")
    return {name, "pair groupoid on two points: A_R(G) is 2x2 matrices", "gf:2", to_json(pair_groupoid(2))};
  if (name == "z2-translation")
    return {name, "Z/2 acting on itself by translation: free, minimal", "gf:3", to_json(translation_action(2))};
  if (name == "munn-semilattice")
    return {name, "two-element semilattice acting on its idempotents: not minimal", "gf:2",
            to_json(munn_action(min_semilattice(2)))};
  if (name == "z4-coefficients")
    return {name, "pair groupoid on two points over Z/4: 2 A_R is a proper ideal", "zmod:4",
            to_json(pair_groupoid(2))};
  if (name == "unit-groupoid")
    return {name, "unit groupoid on three points: effective, not minimal", "gf:2", to_json(unit_groupoid(3))};
  std::string known;
  for (auto const& n : gallery_names()) known += (known.empty() ? "" : ", ") + n;
  throw ParseError(fmt::format("unknown gallery entry '{}'; available: {}", name, known));
}

}  // namespace skewring
