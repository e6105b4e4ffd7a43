#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "k3ns/errors.hpp"
#include "k3ns/rational.hpp"

namespace k3ns {

// Dense row-major matrix over an exact scalar (Int or Rat).
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw domain_error("negative matrix dimension");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_)
        throw domain_error("ragged matrix initializer");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[idx(i, j)]; }
  const T& operator()(int i, int j) const { return data_[idx(i, j)]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw domain_error("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }

  std::vector<T> column(int j) const {
    std::vector<T> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }
  // row_i += c * row_j
  void add_row(int i, int j, const T& c) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
  }
  // col_i += c * col_j
  void add_col(int i, int j, const T& c) {
    for (int k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
  }
  void scale_row(int i, const T& c) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) *= c;
  }
  void scale_col(int j, const T& c) {
    for (int k = 0; k < rows_; ++k) (*this)(k, j) *= c;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw domain_error("matrix shape mismatch");
  }
  std::size_t idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw domain_error("matrix index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_;
  int cols_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

}  // namespace k3ns
