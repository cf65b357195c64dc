#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mcluster/derived/derived_category.hpp"

namespace mcluster::derived {

using json = nlohmann::ordered_json;

/// {"n":..,"orientation":"RL..","summands":[{"degree":r,"interval":[a,b]},...]}
json to_json(const DerivedSum& t);
json to_json(const DerivedObject& x);

struct ParsedSum {
  DerivedSum sum;  // summands in file order
  bool canonical = true;  // summands already sorted by (degree, a, b)
};

/// Throws ParseError with a JSON-pointer location on schema violations.
ParsedSum derived_sum_from_json(const json& j);
ParsedSum parse_derived_sum(std::string_view text);

/// Compact JSON with summands sorted, followed by a newline.
std::string emit(const DerivedSum& t);

}  // namespace mcluster::derived
