#pragma once

#include <vector>

#include "mcluster/algebra/quiver.hpp"
#include "mcluster/algebra/structure_algebra.hpp"

namespace mcluster::algebra {

/// Gabriel quiver of a basic algebra plus chosen arrow lifts. Vertex k+1
/// corresponds to idempotent k; arrow ids are a1, a2, ... ordered by
/// (source, target).
struct QuiverWithLifts {
  Quiver quiver;
  std::vector<Vector> lifts;  // lifts[i] lies in e_target rad e_source
};

/// Throws PreconditionError("not basic-local") when some e_i A e_i is not local.
QuiverWithLifts quiver_of(const StructureAlgebra& a);

/// Smallest N with rad^N = 0.
std::size_t nilpotency_index(const StructureAlgebra& a);

/// Minimal generating relations of the kernel of the evaluation map from
/// the path algebra determined by the lifts. Throws InternalError when the
/// evaluation is not surjective.
Presentation minimal_relations(const StructureAlgebra& a, const QuiverWithLifts& q);

/// quiver_of followed by minimal_relations.
Presentation present(const StructureAlgebra& a);

/// Rebuilds kQ/I as a structure-constant algebra whose basis consists of
/// normal-form paths. Only finite-dimensional quotients are supported; a
/// PreconditionError is raised when the truncation search does not stabilize
/// within `max_length`.
StructureAlgebra algebra_from_presentation(const Presentation& p, std::size_t max_length = 64);

/// C(i, j) = dim e_i A e_j.
Matrix cartan_matrix(const StructureAlgebra& a);

/// dim rad^k / rad^{k+1} for k = 0, 1, ... (k = 0 is the semisimple top).
std::vector<std::size_t> radical_layer_dims(const StructureAlgebra& a);

}  // namespace mcluster::algebra
