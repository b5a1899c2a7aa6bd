#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewring/json_io.hpp"

namespace skewring {

struct GalleryEntry {
  std::string name;
  std::string description;
  std::string carrier;  // default carrier for analyze
  Json input;           // same format `analyze` reads from a file
};

std::vector<std::string> gallery_names();
/// window only affects "snake". Throws ParseError listing the names on a miss.
GalleryEntry gallery_entry(std::string const& name, std::optional<std::size_t> window = std::nullopt);

/// Z/n acting on n discrete points by translation.
PartialAction translation_action(std::size_t n);

}  // namespace skewring
