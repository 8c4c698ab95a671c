#ifndef CARTAN_MATRIX_HPP
#define CARTAN_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cartan/errors.hpp"

namespace cartan {

/// Dense matrix over an exact scalar type.  Ring operations (+, -, *, det by
/// cofactor expansion) work for any commutative coefficient ring, e.g.
/// polynomial entries; elimination-based routines (rref, rank, kernel,
/// row-span queries) additionally require division and are used with field
/// scalars only.  Pivoting is "first nonzero" for determinism.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, std::vector<T>(cols, T(0))) {}
  explicit Matrix(std::vector<std::vector<T>> data) : data_(std::move(data)) {
    rows_ = data_.size();
    cols_ = rows_ ? data_[0].size() : 0;
    for (const auto& r : data_)
      if (r.size() != cols_) throw parameter_error("Matrix: ragged rows");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i][j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }
  const std::vector<T>& row(std::size_t i) const { return data_[i]; }

  bool is_zero() const {
    for (const auto& r : data_)
      for (const auto& x : r)
        if (!(x == T(0))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = data_[i][j];
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) data_[i][j] += o(i, j);
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) data_[i][j] -= o(i, j);
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw parameter_error("Matrix: size mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& r : m.data_)
      for (auto& x : r) x = s * x;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Determinant by cofactor expansion along the first row, pruning zero
  /// entries.  Works over any commutative ring; fine for the small sizes
  /// (<= 7) used here.
  T det() const {
    if (!is_square()) throw parameter_error("Matrix: det of non-square matrix");
    return det_on(std::vector<std::size_t>{}, 0);
  }

  /// Row-reduced echelon form; returns (rref, pivot column list).
  std::pair<Matrix, std::vector<std::size_t>> rref() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && m(p, c) == T(0)) ++p;
      if (p == rows_) continue;
      std::swap(m.data_[p], m.data_[r]);
      T inv = T(1) / m(r, c);
      for (std::size_t j = c; j < cols_; ++j) m(r, j) = inv * m(r, j);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || m(i, c) == T(0)) continue;
        T f = m(i, c);
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return {std::move(m), std::move(pivots)};
  }

  std::size_t rank() const { return rref().second.size(); }

  /// Basis of the right kernel {x : A x = 0}, one column vector per row of
  /// the returned matrix.
  Matrix kernel_basis() const {
    auto [m, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<T> v(cols_, T(0));
      v[free] = T(1);
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
      basis.push_back(std::move(v));
    }
    if (basis.empty()) return Matrix(0, cols_);
    return Matrix(std::move(basis));
  }

  /// Append another matrix's rows (same column count).
  void append_rows(const Matrix& o) {
    if (o.cols_ != cols_ && rows_ != 0)
      throw parameter_error("Matrix: append_rows column mismatch");
    if (rows_ == 0) cols_ = o.cols_;
    for (const auto& r : o.data_) data_.push_back(r);
    rows_ = data_.size();
  }
  void append_row(std::vector<T> r) {
    if (rows_ != 0 && r.size() != cols_) throw parameter_error("Matrix: row length mismatch");
    if (rows_ == 0) cols_ = r.size();
    data_.push_back(std::move(r));
    rows_ = data_.size();
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw parameter_error("Matrix: size mismatch");
  }

  T det_on(std::vector<std::size_t> used_cols, std::size_t row) const {
    if (row == rows_) return T(1);
    T acc(0);
    std::size_t position = 0;  // index of c among the still-available columns
    for (std::size_t c = 0; c < cols_; ++c) {
      bool used = false;
      for (auto u : used_cols)
        if (u == c) used = true;
      if (used) continue;
      const T& entry = data_[row][c];
      if (!(entry == T(0))) {
        used_cols.push_back(c);
        T sub = det_on(used_cols, row + 1);
        used_cols.pop_back();
        T term = entry * sub;
        if (position % 2 == 1) term = -term;
        acc += term;
      }
      ++position;
    }
    return acc;
  }

  std::size_t rows_, cols_;
  std::vector<std::vector<T>> data_;
};

/// Row-span membership and coordinate queries against a fixed basis.  The
/// elimination runs once at construction; each query is a single reduction
/// pass.  Echelon rows carry their expression in the original basis rows so
/// coordinates come out of the same pass.
template <typename T>
class SpanSolver {
 public:
  explicit SpanSolver(const Matrix<T>& basis) : n_(basis.cols()), r_(basis.rows()) {
    for (std::size_t i = 0; i < r_; ++i) {
      std::vector<T> row(n_ + r_, T(0));
      for (std::size_t j = 0; j < n_; ++j) row[j] = basis(i, j);
      row[n_ + i] = T(1);
      insert(std::move(row));
    }
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dimension() const { return n_; }

  bool contains(const std::vector<T>& v) const {
    std::vector<T> ext = extend(v);
    reduce(ext);
    return leading_column(ext) == n_ + r_ + 1;
  }

  /// Coordinates over the ORIGINAL basis rows (nullopt outside the span).
  /// Well-defined only when the basis rows are independent.
  std::optional<std::vector<T>> coordinates(const std::vector<T>& v) const {
    std::vector<T> ext = extend(v);
    reduce(ext);
    for (std::size_t j = 0; j < n_; ++j)
      if (!(ext[j] == T(0))) return std::nullopt;
    std::vector<T> x(r_);
    for (std::size_t i = 0; i < r_; ++i) x[i] = -ext[n_ + i];
    return x;
  }

 private:
  std::vector<T> extend(const std::vector<T>& v) const {
    if (v.size() != n_) throw parameter_error("SpanSolver: vector dimension mismatch");
    std::vector<T> ext(n_ + r_, T(0));
    for (std::size_t j = 0; j < n_; ++j) ext[j] = v[j];
    return ext;
  }

  std::size_t leading_column(const std::vector<T>& row) const {
    for (std::size_t j = 0; j < n_; ++j)
      if (!(row[j] == T(0))) return j;
    return n_ + r_ + 1;
  }

  void reduce(std::vector<T>& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const T& f = row[pivots_[k]];
      if (f == T(0)) continue;
      T factor = f;  // pivot entries are normalized to 1
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= factor * rows_[k][j];
    }
  }

  void insert(std::vector<T> row) {
    reduce(row);
    std::size_t lead = leading_column(row);
    if (lead > n_) return;  // dependent on earlier rows
    T inv = T(1) / row[lead];
    for (auto& x : row) x = inv * x;
    // keep earlier rows fully reduced against the new pivot
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      T f = rows_[k][lead];
      if (f == T(0)) continue;
      for (std::size_t j = 0; j < row.size(); ++j) rows_[k][j] -= f * row[j];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(lead);
  }

  std::size_t n_, r_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
};

/// One-shot row-span membership test.
template <typename T>
bool row_in_span(const Matrix<T>& span, const std::vector<T>& v) {
  return SpanSolver<T>(span).contains(v);
}

/// One-shot coordinates of v over independent basis rows.
template <typename T>
std::optional<std::vector<T>> coordinates_in_span(const Matrix<T>& basis,
                                                  const std::vector<T>& v) {
  return SpanSolver<T>(basis).coordinates(v);
}

}  // namespace cartan

#endif
