#include "mcluster/derived/derived_io.hpp"

#include "mcluster/errors.hpp"

namespace mcluster::derived {

json to_json(const DerivedObject& x) {
  json out;
  out["degree"] = x.degree;
  out["interval"] = json::array({x.module.a, x.module.b});
  return out;
}

json to_json(const DerivedSum& t) {
  json out;
  out["n"] = t.n();
  out["orientation"] = t.orientation.word();
  out["summands"] = json::array();
  for (const auto& x : t.summands) out["summands"].push_back(to_json(x));
  return out;
}

namespace {

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "/" + key, "missing field");
  return *it;
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<int>();
}

}  // namespace

ParsedSum derived_sum_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("", "expected a derived sum object");
  const int n = integer(field(j, "n", ""), "/n");
  if (n < 1) throw ParseError("/n", "n must be at least 1");
  const json& word = field(j, "orientation", "");
  if (!word.is_string()) throw ParseError("/orientation", "expected a string");
  ParsedSum out;
  try {
    out.sum.orientation = Orientation(static_cast<std::size_t>(n), word.get<std::string>());
  } catch (const PreconditionError& e) {
    throw ParseError("/orientation", e.what());
  }
  const json& summands = field(j, "summands", "");
  if (!summands.is_array()) throw ParseError("/summands", "expected an array");
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const std::string where = "/summands/" + std::to_string(k);
    DerivedObject x;
    x.degree = integer(field(summands[k], "degree", where), where + "/degree");
    const json& iv = field(summands[k], "interval", where);
    if (!iv.is_array() || iv.size() != 2) throw ParseError(where + "/interval", "expected [a, b]");
    x.module.a = integer(iv[0], where + "/interval/0");
    x.module.b = integer(iv[1], where + "/interval/1");
    if (x.module.a < 1 || x.module.a > x.module.b || x.module.b > n)
      throw ParseError(where + "/interval", "interval " + rep::to_string(x.module) + " is not within 1 <= a <= b <= " + std::to_string(n));
    out.sum.summands.push_back(x);
  }
  out.canonical = sorted(out.sum).summands == out.sum.summands;
  return out;
}

ParsedSum parse_derived_sum(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return derived_sum_from_json(j);
}

std::string emit(const DerivedSum& t) { return to_json(sorted(t)).dump() + "\n"; }

}  // namespace mcluster::derived
