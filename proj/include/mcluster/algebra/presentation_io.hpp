#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "mcluster/algebra/quiver.hpp"

namespace mcluster::algebra {

using json = nlohmann::ordered_json;

json to_json(const Presentation& p);
/// Throws ParseError with a JSON-pointer location on schema violations.
Presentation presentation_from_json(const json& j);

/// format is "json", "dot" or "text"; anything else throws PreconditionError.
/// Only json and dot can be read back.
std::string emit(const Presentation& p, std::string_view format);

/// Accepts either the JSON document or a DOT file produced by emit.
Presentation parse_presentation(std::string_view text);

/// Vertices ascending, arrows in natural id order (a2 before a10).
Presentation canonical_form(const Presentation& p);

bool natural_less(const std::string& a, const std::string& b);

}  // namespace mcluster::algebra
