#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "invdiff/rational.hpp"

namespace invdiff {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Builds a matrix whose columns are `columns` (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  bool operator==(const Matrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row, in increasing order.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);
std::size_t rank_of_columns(std::size_t rows, const std::vector<Vector>& columns);

/// Basis of {x : m x = 0}. One vector per free column, with a 1 at that
/// column and zeros at the other free columns; ordered by free column.
std::vector<Vector> nullspace(Matrix m);

std::optional<Matrix> inverse(const Matrix& m);

/// Outcome of m x = b. Exactly one of `solution` / `certificate` is set.
/// A certificate y satisfies y^T m = 0 and y^T b != 0.
struct AffineSolution {
  std::optional<Vector> solution;
  std::optional<Vector> certificate;
};

/// Particular solution has all free variables set to zero.
AffineSolution solve_affine(const Matrix& m, const Vector& b);

/// True iff span(a) == span(b) (all vectors of length `dim`).
bool same_span(std::size_t dim, const std::vector<Vector>& a, const std::vector<Vector>& b);

}  // namespace invdiff
