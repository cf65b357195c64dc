#pragma once

#include <map>
#include <optional>
#include <string>

#include "mcluster/algebra/quiver.hpp"

namespace mcluster::algebra {

enum class IsoVerdict { isomorphic, not_isomorphic, inconclusive };

std::string to_string(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::inconclusive;
  std::string reason;
  // filled for isomorphic verdicts
  std::map<int, int> vertex_map;
  std::map<std::string, std::string> arrow_map;
};

/// Some vertex bijection preserving arrow multiplicities, if one exists.
std::optional<std::map<int, int>> find_quiver_isomorphism(const Quiver& p, const Quiver& q);

/// Quivers agree up to vertex relabeling.
bool same_quiver(const Quiver& p, const Quiver& q);

/// Exact for monomial presentations. Otherwise compares dimension, Cartan
/// matrix, and radical layers and returns inconclusive when those agree.
IsoResult presentation_iso(const Presentation& p, const Presentation& q);

/// Monomial relation paths with every path that contains another one as a
/// subword removed. Throws PreconditionError on non-monomial relations.
std::vector<PathWord> minimal_monomials(const Presentation& p);

}  // namespace mcluster::algebra
