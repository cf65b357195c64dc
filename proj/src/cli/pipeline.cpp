#include "mcluster/cli/pipeline.hpp"

#include <sstream>

#include "mcluster/algebra/modules.hpp"
#include "mcluster/algebra/presentation.hpp"
#include "mcluster/algebra/presentation_io.hpp"
#include "mcluster/cluster/cluster_category.hpp"
#include "mcluster/derived/derived_io.hpp"
#include "mcluster/derived/tilting.hpp"
#include "mcluster/errors.hpp"

namespace mcluster::cli {

PipelineReport run_pipeline(const derived::DerivedSum& t, const PipelineOptions& options) {
  const int m = options.m;
  if (m < 1) throw PreconditionError("pipeline: m must be at least 1");
  const std::size_t bound = options.gldim_bound.value_or(static_cast<std::size_t>(2 * m + 4));

  PipelineReport r;
  r.input = t;
  r.m = m;
  derived::require_tilting(t);
  algebra::StructureAlgebra b = derived::endo_algebra(t);
  r.b = algebra::present(b);
  auto gl = algebra::global_dimension(b, bound);
  if (!gl) throw PreconditionError("pipeline: gldim End(T) exceeds the bound " + std::to_string(bound));
  r.gldim_b = *gl;
  if (*gl > static_cast<std::size_t>(m) + 1)
    throw PreconditionError("pipeline: gldim End(T) = " + std::to_string(*gl) + " > m+1 = " + std::to_string(m + 1));

  r.cluster_b = algebra::present(cluster::cluster_endo(t, m).algebra);
  r.relext_b = algebra::present(cluster::relation_extension(t, m, bound).algebra);
  r.same_quiver = algebra::same_quiver(r.cluster_b.quiver, r.relext_b.quiver);
  r.cluster_vs_relext = algebra::presentation_iso(r.cluster_b, r.relext_b);

  r.rolling = derived::roll_to_fundamental(t, m, options.max_steps, bound);
  const derived::DerivedSum& star = r.rolling.result;
  r.b_prime = algebra::present(derived::endo_algebra(star));
  r.relext_b_prime = algebra::present(cluster::relation_extension(star, m, bound).algebra);
  r.cluster_b_prime = algebra::present(cluster::cluster_endo(star, m).algebra);
  r.verdict = algebra::presentation_iso(r.cluster_b, r.relext_b_prime);
  r.verdict_cluster = algebra::presentation_iso(r.relext_b_prime, r.cluster_b_prime);
  return r;
}

namespace {

nlohmann::ordered_json iso_json(const algebra::IsoResult& r) {
  nlohmann::ordered_json out;
  out["verdict"] = algebra::to_string(r.verdict);
  out["reason"] = r.reason;
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const PipelineReport& r) {
  nlohmann::ordered_json out;
  out["input"] = derived::to_json(derived::sorted(r.input));
  out["m"] = r.m;
  out["B"] = algebra::to_json(r.b);
  out["gldim_B"] = r.gldim_b;
  out["C_m(B)"] = algebra::to_json(r.cluster_b);
  out["R_m(B)"] = algebra::to_json(r.relext_b);
  out["same_quiver"] = r.same_quiver;
  out["C_m(B)_vs_R_m(B)"] = iso_json(r.cluster_vs_relext);
  nlohmann::ordered_json rolling;
  rolling["steps"] = r.rolling.steps;
  rolling["rolled"] = derived::to_json(derived::sorted(r.rolling.rolled));
  rolling["slice"] = r.rolling.domain_slice.sigma;
  rolling["result"] = derived::to_json(derived::sorted(r.rolling.result));
  out["rolling"] = rolling;
  out["B'"] = algebra::to_json(r.b_prime);
  out["R_m(B')"] = algebra::to_json(r.relext_b_prime);
  out["C_m(B')"] = algebra::to_json(r.cluster_b_prime);
  out["R_m(B')_vs_C_m(B')"] = iso_json(r.verdict_cluster);
  out["verdict"] = iso_json(r.verdict);
  return out;
}

std::string to_text(const PipelineReport& r) {
  std::ostringstream out;
  out << "input T: " << derived::emit(derived::sorted(r.input));
  out << "m = " << r.m << "\n\n";
  out << "B = End(T), gldim " << r.gldim_b << ":\n" << algebra::emit(r.b, "text") << "\n";
  out << "C_m(B):\n" << algebra::emit(r.cluster_b, "text") << "\n";
  out << "R_m(B):\n" << algebra::emit(r.relext_b, "text") << "\n";
  out << "same quiver: " << (r.same_quiver ? "yes" : "no") << "\n";
  out << "C_m(B) vs R_m(B): " << algebra::to_string(r.cluster_vs_relext.verdict) << "\n\n";
  out << "rolling steps h = " << r.rolling.steps << "\n";
  out << "rho^h(T): " << derived::emit(derived::sorted(r.rolling.rolled));
  out << "T* (transported): " << derived::emit(derived::sorted(r.rolling.result)) << "\n";
  out << "B' = End(T*):\n" << algebra::emit(r.b_prime, "text") << "\n";
  out << "R_m(B'):\n" << algebra::emit(r.relext_b_prime, "text") << "\n";
  out << "R_m(B') vs C_m(B'): " << algebra::to_string(r.verdict_cluster.verdict) << "\n";
  out << "C_m(B) vs R_m(B'): " << algebra::to_string(r.verdict.verdict) << "\n";
  return out.str();
}

}  // namespace mcluster::cli
