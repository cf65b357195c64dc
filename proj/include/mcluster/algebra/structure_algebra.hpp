#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcluster/algebra/matrix.hpp"

namespace mcluster::algebra {

/// Sparse vector as (index, coefficient) pairs with strictly increasing
/// indices and nonzero coefficients.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n);

/// A finite-dimensional algebra given by a basis and exact structure
/// constants: basis[i] * basis[j] = sum_k c_ij^k basis[k].
///
/// The product is composition order: for basis elements that are morphisms,
/// x * y means "x after y".  A complete set of orthogonal idempotents summing
/// to 1 is part of the data; when the algebra carries a grading each basis
/// element has an integer grade.
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  StructureAlgebra(std::vector<std::string> labels, std::vector<std::vector<SparseVector>> products,
                   std::vector<Vector> idempotents, std::optional<std::vector<int>> grades = std::nullopt);

  std::size_t dim() const { return labels_.size(); }
  std::size_t num_idempotents() const { return idempotents_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_.at(i).at(j); }
  const Vector& idempotent(std::size_t i) const { return idempotents_.at(i); }
  const std::vector<Vector>& idempotents() const { return idempotents_; }
  bool graded() const { return grades_.has_value(); }
  int grade(std::size_t i) const { return grades_ ? grades_->at(i) : 0; }
  const std::optional<std::vector<int>>& grades() const { return grades_; }

  Vector multiply(const Vector& x, const Vector& y) const;
  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }
  Vector one() const;

  /// Matrix of y -> x * y (columns indexed by basis elements).
  Matrix left_multiplication(const Vector& x) const;
  /// Matrix of y -> y * x.
  Matrix right_multiplication(const Vector& x) const;

  /// Basis of the subspace e_target * A * e_source.
  std::vector<Vector> peirce_component(std::size_t target, std::size_t source) const;

  /// Human-readable violations of associativity, idempotent orthogonality,
  /// completeness, and grade additivity. Empty when the data is valid.
  std::vector<std::string> validate() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVector>> products_;
  std::vector<Vector> idempotents_;
  std::optional<std::vector<int>> grades_;
};

/// Jacobson radical as the radical of the trace form (x, y) -> tr(L_{xy}),
/// valid in characteristic zero. Columns are ordered by sorted basis label so
/// the returned basis is deterministic.
std::vector<Vector> radical_basis(const StructureAlgebra& a);

/// Basis of span{ x * y : x in lhs, y in rhs }.
std::vector<Vector> product_span(const StructureAlgebra& a, const std::vector<Vector>& lhs,
                                 const std::vector<Vector>& rhs);

/// rad^1, rad^2, ... up to and excluding the first zero power.
std::vector<std::vector<Vector>> radical_powers(const StructureAlgebra& a);

}  // namespace mcluster::algebra
