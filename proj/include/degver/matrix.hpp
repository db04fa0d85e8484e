// Exact dense linear algebra over a field type F.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace degver {

class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// Row-major dense matrix over an exact field. F needs value semantics,
/// F(0)/F(1), field operators and is_zero().
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, F(0)) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = F(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  F& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const F& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  std::vector<F> row(size_t i) const {
    return std::vector<F>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return c;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    std::vector<F> out(rows_, F(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<F> e_;
};

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<size_t> pivot_columns;
  size_t rank = 0;
};

/// Reduced row-echelon form with deterministic pivoting: in each column the
/// first row with a nonzero entry becomes the pivot.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  RrefResult<F> out;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(p, j));
    F inv = F(1) / m.at(r, c);
    for (size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      F f = m.at(i, c);
      for (size_t j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

template <class F>
size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

/// Basis of the right kernel; size is cols - rank.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  RrefResult<F> r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : r.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (size_t i = 0; i < r.pivot_columns.size(); ++i)
      v[r.pivot_columns[i]] = F(0) - r.reduced.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
Matrix<F> invert(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw SingularMatrixError("inverse of a non-square matrix");
  size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = F(1);
  }
  RrefResult<F> r = rref(std::move(aug));
  for (size_t i = 0; i < n; ++i)
    if (i >= r.pivot_columns.size() || r.pivot_columns[i] != i)
      throw SingularMatrixError("matrix is singular over the coefficient field");
  Matrix<F> inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
  return inv;
}

}  // namespace degver
