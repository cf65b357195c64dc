#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mcluster/algebra/gentle.hpp"
#include "mcluster/derived/derived_category.hpp"

namespace mcluster::cli {

struct EnumerationLimits {
  std::size_t max_n = 6;
  int max_m = 3;
};

struct EnumeratedObject {
  derived::DerivedSum object;          // summands in S_m, sorted
  algebra::Presentation presentation;  // of End_{C_m}(object)
  std::string digest;                  // sha256 of the canonical presentation JSON
  algebra::GentleReport gentle;
};

struct EnumerationReport {
  std::size_t n = 0;
  int m = 1;
  rep::Orientation orientation;
  std::vector<EnumeratedObject> objects;
  std::size_t gentle_count = 0;
  std::size_t cycle_compliant_count = 0;

  std::size_t count() const { return objects.size(); }
};

/// Backtracking over n-subsets of the indecomposables of S_m, pruned by
/// pairwise vanishing of Ext^j_{C_m} for j = 1..m. Throws PreconditionError
/// beyond the limits.
EnumerationReport enumerate_tilting(const rep::Orientation& o, int m, const EnumerationLimits& limits = {});

nlohmann::ordered_json to_json(const EnumerationReport& r);

std::string sha256_hex(const std::string& data);

}  // namespace mcluster::cli
