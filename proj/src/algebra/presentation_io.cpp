#include "mcluster/algebra/presentation_io.hpp"

#include <algorithm>
#include <sstream>

#include "mcluster/errors.hpp"

namespace mcluster::algebra {

namespace {

constexpr std::string_view kJsonMarker = "// presentation-json: ";

std::string relation_path(std::size_t r, std::size_t t) {
  return "/relations/" + std::to_string(r) + "/terms/" + std::to_string(t);
}

const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "/" + key, "missing field");
  return *it;
}

int require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<int>();
}

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    std::string prefix = s.substr(0, k);
    std::string digits = s.substr(k);
    return std::make_tuple(prefix, digits.size(), digits);
  };
  return split(a) < split(b);
}

json to_json(const Presentation& p) {
  json out;
  out["vertices"] = json::array();
  for (int v : p.quiver.vertices()) out["vertices"].push_back(v);
  out["arrows"] = json::array();
  for (const Arrow& a : p.quiver.arrows()) {
    json arrow;
    arrow["id"] = a.id;
    arrow["from"] = a.source;
    arrow["to"] = a.target;
    if (a.grade) arrow["grade"] = *a.grade;
    out["arrows"].push_back(arrow);
  }
  out["relations"] = json::array();
  for (const Relation& r : p.relations) {
    json terms = json::array();
    for (const Term& t : r.terms) {
      json term;
      term["coef"] = to_string(t.coef);
      term["path"] = t.path;
      terms.push_back(term);
    }
    json rel;
    rel["terms"] = terms;
    out["relations"].push_back(rel);
  }
  return out;
}

Presentation presentation_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("", "expected a presentation object");
  const json& vertices = require(j, "vertices", "");
  if (!vertices.is_array()) throw ParseError("/vertices", "expected an array");
  std::vector<int> vs;
  for (std::size_t i = 0; i < vertices.size(); ++i) vs.push_back(require_int(vertices[i], "/vertices/" + std::to_string(i)));

  const json& arrows = require(j, "arrows", "");
  if (!arrows.is_array()) throw ParseError("/arrows", "expected an array");
  std::vector<Arrow> as;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string where = "/arrows/" + std::to_string(i);
    Arrow a;
    const json& id = require(arrows[i], "id", where);
    if (!id.is_string()) throw ParseError(where + "/id", "expected a string");
    a.id = id.get<std::string>();
    a.source = require_int(require(arrows[i], "from", where), where + "/from");
    a.target = require_int(require(arrows[i], "to", where), where + "/to");
    if (arrows[i].contains("grade")) a.grade = require_int(arrows[i]["grade"], where + "/grade");
    if (std::find(vs.begin(), vs.end(), a.source) == vs.end()) throw ParseError(where + "/from", "unknown vertex");
    if (std::find(vs.begin(), vs.end(), a.target) == vs.end()) throw ParseError(where + "/to", "unknown vertex");
    as.push_back(std::move(a));
  }

  Presentation p;
  try {
    p.quiver = Quiver(vs, as);
  } catch (const PreconditionError& e) {
    throw ParseError("/arrows", e.what());
  }

  const json& relations = require(j, "relations", "");
  if (!relations.is_array()) throw ParseError("/relations", "expected an array");
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const std::string where = "/relations/" + std::to_string(r);
    const json& terms = require(relations[r], "terms", where);
    if (!terms.is_array() || terms.empty()) throw ParseError(where + "/terms", "expected a nonempty array");
    Relation rel;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tw = relation_path(r, t);
      const json& coef = require(terms[t], "coef", tw);
      if (!coef.is_string()) throw ParseError(tw + "/coef", "expected a rational string");
      Term term;
      try {
        term.coef = parse_rational(coef.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ParseError(tw + "/coef", e.what());
      }
      const json& path = require(terms[t], "path", tw);
      if (!path.is_array()) throw ParseError(tw + "/path", "expected an array of arrow ids");
      for (std::size_t k = 0; k < path.size(); ++k) {
        if (!path[k].is_string()) throw ParseError(tw + "/path/" + std::to_string(k), "expected an arrow id");
        term.path.push_back(path[k].get<std::string>());
      }
      rel.terms.push_back(std::move(term));
    }
    p.relations.push_back(std::move(rel));
    try {
      Presentation single{p.quiver, {p.relations.back()}};
      validate_presentation(single);
    } catch (const PreconditionError& e) {
      throw ParseError(where, e.what());
    }
  }
  return p;
}

Presentation canonical_form(const Presentation& p) {
  std::vector<int> vs = p.quiver.vertices();
  std::sort(vs.begin(), vs.end());
  std::vector<Arrow> as = p.quiver.arrows();
  std::stable_sort(as.begin(), as.end(), [](const Arrow& a, const Arrow& b) { return natural_less(a.id, b.id); });
  return Presentation{Quiver(std::move(vs), std::move(as)), p.relations};
}

std::string emit(const Presentation& p, std::string_view format) {
  if (format == "json") return to_json(p).dump() + "\n";
  if (format == "text") {
    Presentation sorted = canonical_form(p);
    std::ostringstream out;
    out << "vertices:";
    for (int v : sorted.quiver.vertices()) out << " " << v;
    out << "\n";
    for (const Arrow& a : sorted.quiver.arrows()) {
      out << "arrow " << a.id << ": " << a.source << " -> " << a.target;
      if (a.grade && *a.grade > 0) out << " (grade " << *a.grade << ")";
      out << "\n";
    }
    for (const Relation& r : p.relations) {
      out << "relation:";
      for (std::size_t k = 0; k < r.terms.size(); ++k) {
        const Term& t = r.terms[k];
        if (k > 0 || t.coef != 1) out << " " << to_string(t.coef);
        for (const auto& id : t.path) out << " " << id;
        if (k + 1 < r.terms.size()) out << " +";
      }
      out << "\n";
    }
    return out.str();
  }
  if (format != "dot") throw PreconditionError("unknown presentation format '" + std::string(format) + "'");

  Presentation sorted = canonical_form(p);
  std::ostringstream out;
  out << "digraph presentation {\n";
  out << "  " << kJsonMarker << to_json(p).dump() << "\n";
  out << "  rankdir=LR;\n";
  for (int v : sorted.quiver.vertices()) out << "  " << v << ";\n";
  for (const Arrow& a : sorted.quiver.arrows()) {
    out << "  " << a.source << " -> " << a.target << " [label=\"" << a.id;
    if (a.grade && *a.grade > 0) out << " (" << *a.grade << ")\", style=bold, color=blue]";
    else out << "\"]";
    out << ";\n";
  }
  for (const Relation& r : p.relations) {
    Path first = resolve(p.quiver, r.terms.front().path);
    out << "  " << first.start << " -> " << first.end(p.quiver) << " [style=dashed, arrowhead=none, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

Presentation parse_presentation(std::string_view text) {
  std::string body(text);
  auto marker = body.find(kJsonMarker);
  if (marker != std::string::npos) {
    auto start = marker + kJsonMarker.size();
    auto end = body.find('\n', start);
    body = body.substr(start, end == std::string::npos ? std::string::npos : end - start);
  }
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return presentation_from_json(j);
}

}  // namespace mcluster::algebra
