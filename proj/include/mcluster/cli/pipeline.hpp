#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mcluster/algebra/isomorphism.hpp"
#include "mcluster/derived/rolling.hpp"

namespace mcluster::cli {

struct PipelineOptions {
  int m = 1;
  std::optional<std::size_t> gldim_bound;  // default 2m+4
  std::optional<std::size_t> max_steps;    // default rolling cap
};

struct PipelineReport {
  derived::DerivedSum input;
  int m = 1;
  algebra::Presentation b;
  std::size_t gldim_b = 0;
  algebra::Presentation cluster_b;      // C_m(B)
  algebra::Presentation relext_b;       // R_m(B)
  bool same_quiver = false;
  algebra::IsoResult cluster_vs_relext;  // C_m(B) against R_m(B)
  derived::RollingResult rolling;
  algebra::Presentation b_prime;
  algebra::Presentation relext_b_prime;  // R_m(B')
  algebra::Presentation cluster_b_prime; // C_m(B')
  algebra::IsoResult verdict;            // C_m(B) against R_m(B')
  algebra::IsoResult verdict_cluster;    // R_m(B') against C_m(B')

  bool isomorphic() const { return verdict.verdict == algebra::IsoVerdict::isomorphic; }
};

/// check -> present -> cluster_endo -> relation_extension -> roll_to_fundamental
/// -> present(B') -> relation_extension(T*) -> presentation_iso.
/// Precondition failures propagate as PreconditionError.
PipelineReport run_pipeline(const derived::DerivedSum& t, const PipelineOptions& options);

nlohmann::ordered_json to_json(const PipelineReport& r);
std::string to_text(const PipelineReport& r);

}  // namespace mcluster::cli
