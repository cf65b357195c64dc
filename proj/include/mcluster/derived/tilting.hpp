#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcluster/algebra/structure_algebra.hpp"
#include "mcluster/derived/derived_category.hpp"

namespace mcluster::derived {

/// Hom(T_source, T_target[shift]) != 0 with shift != 0.
struct TiltingViolation {
  int shift = 0;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct TiltingCertificate {
  bool tilting = false;
  std::vector<std::string> issues;  // structural problems (count, duplicates)
  std::vector<TiltingViolation> violations;
};

TiltingCertificate is_tilting_complex(const DerivedSum& t);

/// Throws PreconditionError carrying the certificate summary unless t is tilting.
void require_tilting(const DerivedSum& t);

/// End(T) with basis the Hom bases over ordered summand pairs; summand k is
/// idempotent k. Products are honest compositions (x * y = x after y).
algebra::StructureAlgebra endo_algebra(const DerivedSum& t);

/// { i in [-window, window] : Hom(tau T[1], T[i]) != 0 }.
std::set<int> ext_profile(const DerivedSum& t, int window);

std::string describe(const TiltingCertificate& c, const DerivedSum& t);

/// Throws PreconditionError unless gldim End(T) <= m+1; the search stops at
/// `bound` (default 2m+4).
void require_gldim_at_most_m_plus_1(const DerivedSum& t, int m, std::optional<std::size_t> bound);

}  // namespace mcluster::derived
