#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "narayana/poset.hpp"

namespace narayana {

/// Reads a labeled poset from either format:
///
/// JSON:  {"size": 3, "covers": [[1, 2], [1, 3]], "labeling": [2, 1, 3]}
///
/// Text (one directive per line, '#' starts a comment):
///   size 3
///   cover 1 2
///   cover 1 3
///   labeling 2 1 3
///
/// Elements are 1..size; "labeling" lists omega(1) ... omega(size) and
/// defaults to the identity when absent. Throws ValidationError.
LabeledPoset parse_poset(std::string_view text);

LabeledPoset load_poset(const std::filesystem::path& path);

/// The JSON form accepted by parse_poset.
std::string poset_to_json(const LabeledPoset& poset);

}  // namespace narayana
