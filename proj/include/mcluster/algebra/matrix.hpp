#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mcluster/algebra/rational.hpp"

namespace mcluster::algebra {

/// Dense matrix over the rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(const Rational& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

EchelonForm row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of the null space, one vector per free column of the reduced
/// echelon form (free entry 1, other free entries 0). Deterministic.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with m * x = b, or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// Incrementally maintained span of vectors of a fixed length, kept in
/// reduced echelon form. Used for greedy complement selection.
class Span {
 public:
  explicit Span(std::size_t length) : length_(length) {}

  std::size_t length() const { return length_; }
  std::size_t dimension() const { return rows_.size(); }

  /// Reduces v against the current basis; the result is zero iff v is in the span.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  /// Adds v; returns true iff the dimension grew.
  bool add(const Vector& v);

  /// Reduced rows; row k has a 1 in column pivots()[k] and zeros in every
  /// other pivot column.
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t length_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace mcluster::algebra
