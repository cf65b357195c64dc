#include "mcluster/algebra/structure_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mcluster::algebra {

SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.emplace_back(i, v[i]);
  return s;
}

Vector to_dense(const SparseVector& v, std::size_t n) {
  Vector d = zero_vector(n);
  for (const auto& [i, c] : v) d.at(i) = c;
  return d;
}

StructureAlgebra::StructureAlgebra(std::vector<std::string> labels, std::vector<std::vector<SparseVector>> products,
                                   std::vector<Vector> idempotents, std::optional<std::vector<int>> grades)
    : labels_(std::move(labels)),
      products_(std::move(products)),
      idempotents_(std::move(idempotents)),
      grades_(std::move(grades)) {
  const std::size_t d = labels_.size();
  if (products_.size() != d) throw std::invalid_argument("StructureAlgebra: product table has wrong row count");
  for (const auto& row : products_)
    if (row.size() != d) throw std::invalid_argument("StructureAlgebra: product table has wrong column count");
  for (const auto& e : idempotents_)
    if (e.size() != d) throw std::invalid_argument("StructureAlgebra: idempotent has wrong length");
  if (grades_ && grades_->size() != d) throw std::invalid_argument("StructureAlgebra: grade list has wrong length");
}

Vector StructureAlgebra::multiply(const Vector& x, const Vector& y) const {
  Vector out = zero_vector(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      Rational f = x[i] * y[j];
      for (const auto& [k, c] : products_[i][j]) out[k] += f * c;
    }
  }
  return out;
}

Vector StructureAlgebra::one() const {
  Vector u = zero_vector(dim());
  for (const auto& e : idempotents_)
    for (std::size_t i = 0; i < dim(); ++i) u[i] += e[i];
  return u;
}

Matrix StructureAlgebra::left_multiplication(const Vector& x) const {
  std::vector<Vector> cols;
  cols.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(x, basis_vector(j)));
  return Matrix::from_columns(dim(), cols);
}

Matrix StructureAlgebra::right_multiplication(const Vector& x) const {
  std::vector<Vector> cols;
  cols.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(basis_vector(j), x));
  return Matrix::from_columns(dim(), cols);
}

std::vector<Vector> StructureAlgebra::peirce_component(std::size_t target, std::size_t source) const {
  Span span(dim());
  std::vector<Vector> basis;
  for (std::size_t j = 0; j < dim(); ++j) {
    Vector v = multiply(multiply(idempotent(target), basis_vector(j)), idempotent(source));
    if (span.add(v)) basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::string> StructureAlgebra::validate() const {
  std::vector<std::string> issues;
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector ij = to_dense(products_[i][j], d);
      for (std::size_t k = 0; k < d; ++k) {
        Vector lhs = multiply(ij, basis_vector(k));
        Vector rhs = multiply(basis_vector(i), to_dense(products_[j][k], d));
        if (lhs != rhs) {
          issues.push_back("associativity fails on (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ")");
          if (issues.size() > 8) return issues;
        }
      }
      if (grades_) {
        for (const auto& [k, c] : products_[i][j])
          if ((*grades_)[k] != (*grades_)[i] + (*grades_)[j])
            issues.push_back("grade additivity fails on (" + labels_[i] + ", " + labels_[j] + ")");
      }
    }
  for (std::size_t a = 0; a < idempotents_.size(); ++a)
    for (std::size_t b = 0; b < idempotents_.size(); ++b) {
      Vector p = multiply(idempotents_[a], idempotents_[b]);
      Vector expected = a == b ? idempotents_[a] : zero_vector(d);
      if (p != expected) issues.push_back("idempotents " + std::to_string(a) + ", " + std::to_string(b) + " not orthogonal");
    }
  Vector u = one();
  for (std::size_t i = 0; i < d; ++i) {
    Vector b = basis_vector(i);
    if (multiply(u, b) != b || multiply(b, u) != b) {
      issues.push_back("idempotents do not sum to the identity");
      break;
    }
  }
  return issues;
}

std::vector<Vector> radical_basis(const StructureAlgebra& a) {
  const std::size_t d = a.dim();
  // trace of left multiplication by each basis element
  Vector traces = zero_vector(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [idx, c] : a.product(k, j))
        if (idx == j) traces[k] += c;

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a.label(x) < a.label(y); });

  Matrix gram(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      Rational t = 0;
      for (const auto& [k, coef] : a.product(order[r], order[c])) t += coef * traces[k];
      gram(r, c) = t;
    }
  std::vector<Vector> basis;
  for (const Vector& v : kernel_basis(gram)) {
    Vector w = zero_vector(d);
    for (std::size_t c = 0; c < d; ++c) w[order[c]] = v[c];
    basis.push_back(std::move(w));
  }
  return basis;
}

std::vector<Vector> product_span(const StructureAlgebra& a, const std::vector<Vector>& lhs,
                                 const std::vector<Vector>& rhs) {
  Span span(a.dim());
  std::vector<Vector> basis;
  for (const auto& x : lhs)
    for (const auto& y : rhs) {
      Vector p = a.multiply(x, y);
      if (span.add(p)) basis.push_back(std::move(p));
    }
  return basis;
}

std::vector<std::vector<Vector>> radical_powers(const StructureAlgebra& a) {
  std::vector<std::vector<Vector>> powers;
  std::vector<Vector> rad = radical_basis(a);
  std::vector<Vector> current = rad;
  while (!current.empty()) {
    powers.push_back(current);
    if (powers.size() > a.dim() + 1) throw std::logic_error("radical_powers: radical is not nilpotent");
    current = product_span(a, current, rad);
  }
  return powers;
}

}  // namespace mcluster::algebra
