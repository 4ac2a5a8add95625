#include "invdiff/linalg.hpp"

#include <utility>

#include "invdiff/error.hpp"

namespace invdiff {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::kDimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::kDimensionMismatch, "matrix-vector shape mismatch");
  Vector out = zero_vector(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (v[k] != 0 && (*this)(i, k) != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

namespace {

// Gauss-Jordan restricted to pivots in columns [0, pivot_limit); the
// remaining columns are carried along.
std::vector<std::size_t> rref_limited(Matrix& m, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  std::vector<std::size_t> support;
  for (std::size_t col = 0; col < pivot_limit && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));

    Rational inv = 1 / m(row, col);
    support.clear();
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (m(row, c) == 0) continue;
      m(row, c) *= inv;
      support.push_back(c);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c : support) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref(Matrix& m) { return rref_limited(m, m.cols()); }

std::size_t rank(Matrix m) { return rref(m).size(); }

std::size_t rank_of_columns(std::size_t rows, const std::vector<Vector>& columns) {
  if (columns.empty() || rows == 0) return 0;
  // Rows of the transpose: one per input vector.
  Matrix t(columns.size(), rows);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].size() != rows) throw Error(ErrorCode::kDimensionMismatch, "vector length mismatch");
    for (std::size_t j = 0; j < rows; ++j) t(i, j) = columns[i][j];
  }
  return rank(std::move(t));
}

std::vector<Vector> nullspace(Matrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref_limited(aug, n);
  if (pivots.size() != n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

AffineSolution solve_affine(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::kDimensionMismatch, "right-hand side length mismatch");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // [m | b | I]: the identity block records the row operations.
  Matrix aug(rows, cols + 1 + rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b[i];
    aug(i, cols + 1 + i) = 1;
  }
  auto pivots = rref_limited(aug, cols + 1);
  AffineSolution out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) {
      Vector y(rows);
      for (std::size_t k = 0; k < rows; ++k) y[k] = aug(i, cols + 1 + k);
      out.certificate = std::move(y);
      return out;
    }
  }
  Vector x = zero_vector(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols);
  out.solution = std::move(x);
  return out;
}

bool same_span(std::size_t dim, const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::size_t ra = rank_of_columns(dim, a);
  std::size_t rb = rank_of_columns(dim, b);
  if (ra != rb) return false;
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank_of_columns(dim, both) == ra;
}

}  // namespace invdiff
