#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axial/error.hpp"
#include "axial/rational.hpp"

namespace axial {

/// Dense row-major matrix of exact rationals. Shape is fixed at construction.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    return from_rows(columns, rows).transpose();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

  Vector column(std::size_t j) const {
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
  }

  bool is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }

  friend Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x *= s;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (sgn(b(k, j)) != 0) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    Vector r = zero_vector(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (sgn(v[j]) != 0 && sgn(a(i, j)) != 0) r[i] += a(i, j) * v[j];
    return r;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination to the unique reduced row echelon form.
inline RrefResult rref(Matrix m) {
  RrefResult out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pivot_row, j));
    const Rational inv = 1 / m(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || sgn(m(i, col)) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (sgn(m(pivot_row, j)) != 0) m(i, j) -= f * m(pivot_row, j);
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.rank = out.pivot_columns.size();
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// A linear subspace of Q^n, stored as the nonzero rows of its reduced row
/// echelon form. Equal subspaces therefore compare equal as values.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static SubspaceBasis span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    SubspaceBasis s(ambient_dim);
    if (vectors.empty()) return s;
    auto r = rref(Matrix::from_rows(vectors, ambient_dim));
    for (std::size_t i = 0; i < r.rank; ++i) s.vectors_.push_back(r.reduced.row(i));
    s.pivots_ = std::move(r.pivot_columns);
    return s;
  }

  static SubspaceBasis whole(std::size_t n) {
    std::vector<Vector> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(n, i));
    return span(n, e);
  }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return vectors_.size(); }
  bool is_zero() const noexcept { return vectors_.empty(); }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Coefficients of v on vectors(), or nullopt when v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
    Vector c(dim());
    Vector rest = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      c[i] = v[pivots_[i]];
      axpy(-c[i], vectors_[i], rest);
    }
    if (!axial::is_zero(rest)) return std::nullopt;
    return c;
  }

  bool contains(const Vector& v) const { return coordinates(v).has_value(); }

  bool contains(const SubspaceBasis& other) const {
    return std::all_of(other.vectors_.begin(), other.vectors_.end(), [&](const Vector& v) { return contains(v); });
  }

  SubspaceBasis sum(const SubspaceBasis& other) const {
    std::vector<Vector> all = vectors_;
    all.insert(all.end(), other.vectors_.begin(), other.vectors_.end());
    return span(ambient_, all);
  }

  SubspaceBasis intersect(const SubspaceBasis& other) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.vectors_ == b.vectors_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> vectors_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0}.
inline SubspaceBasis kernel_basis(const Matrix& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivot_columns) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_columns[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return SubspaceBasis::span(m.cols(), basis);
}

/// Some x with m x = rhs (free variables set to zero), or nullopt if the
/// system is inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const auto r = rref(std::move(aug));
  if (!r.pivot_columns.empty() && r.pivot_columns.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivot_columns[i]] = r.reduced(i, m.cols());
  return x;
}

inline SubspaceBasis SubspaceBasis::intersect(const SubspaceBasis& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspaces live in different spaces");
  if (is_zero() || other.is_zero()) return SubspaceBasis(ambient_);
  // columns u_1..u_k, -w_1..-w_l; a kernel vector (x, y) gives sum x_i u_i in both.
  std::vector<Vector> columns = vectors_;
  for (const auto& w : other.vectors_) columns.push_back(scale(-1, w));
  const auto ker = kernel_basis(Matrix::from_columns(columns, ambient_));
  std::vector<Vector> common;
  for (const auto& k : ker.vectors()) {
    Vector v = zero_vector(ambient_);
    for (std::size_t i = 0; i < dim(); ++i) axpy(k[i], vectors_[i], v);
    common.push_back(std::move(v));
  }
  return span(ambient_, common);
}

inline Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && sgn(m(sel, col)) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(m(i, col)) == 0) continue;
      const Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

/// det of the top-left k x k block, k = 1..n.
inline std::vector<Rational> leading_principal_minors(const Matrix& m) {
  std::vector<Rational> minors;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Matrix block(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block(i, j) = m(i, j);
    minors.push_back(determinant(std::move(block)));
  }
  return minors;
}

}  // namespace axial
