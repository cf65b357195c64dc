#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mcluster/algebra/structure_algebra.hpp"

namespace mcluster::algebra {

/// A right A-module realized as a subspace of an ambient space carrying a
/// right A-action. Syzygies live inside free modules e_{j_1}A ⊕ ... ⊕ e_{j_r}A
/// whose elements are stored as concatenated algebra vectors.
struct RightModule {
  std::size_t ambient_dim = 0;
  /// v · x for an ambient vector v and an algebra element x.
  std::function<Vector(const Vector&, const Vector&)> act;
  std::vector<Vector> basis;

  std::size_t dim() const { return basis.size(); }
};

/// e_{j_1}A ⊕ ... ⊕ e_{j_r}A as a module whose ambient is r copies of A.
RightModule free_module(const StructureAlgebra& a, const std::vector<std::size_t>& summands);

/// Basis of the right ideal e_j A.
std::vector<Vector> right_ideal_basis(const StructureAlgebra& a, std::size_t j);

struct ProjectiveCover {
  std::vector<std::size_t> summands;  // idempotent index of each e_j A in the cover
  std::vector<Vector> generators;     // image of e_j under the cover map, in M's ambient
  RightModule kernel;                 // first syzygy, inside free_module(summands)
};

ProjectiveCover projective_cover(const StructureAlgebra& a, const RightModule& m);

/// Projective dimension, or nullopt once the syzygy chain passes `bound`.
std::optional<std::size_t> projective_dimension(const StructureAlgebra& a, const RightModule& m, std::size_t bound);

/// Projective dimension of the simple top of e_j A.
std::optional<std::size_t> simple_projective_dimension(const StructureAlgebra& a, std::size_t j, std::size_t bound);

/// Maximum over simples; nullopt means "exceeds bound".
std::optional<std::size_t> global_dimension(const StructureAlgebra& a, std::size_t bound);

}  // namespace mcluster::algebra
