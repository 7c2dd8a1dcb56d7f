#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "templikit/coeff/ring.hpp"
#include "templikit/coeff/scalar.hpp"

namespace templikit::coeff {

/// Dense row-major matrix of Scalars. Ring-free: arithmetic that needs a ring
/// takes it explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  /// From nested initializer data, used mostly in tests.
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

  bool is_zero() const;
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix mat_mul(const Ring& R, const Matrix& a, const Matrix& b);
Matrix mat_add(const Ring& R, const Matrix& a, const Matrix& b);
Matrix mat_sub(const Ring& R, const Matrix& a, const Matrix& b);
Matrix mat_scale(const Ring& R, const Scalar& s, const Matrix& a);
/// Kronecker product, row index (i, k) -> i * b.rows() + k.
Matrix kron(const Ring& R, const Matrix& a, const Matrix& b);
/// Entrywise canonical representatives.
Matrix mat_reduce(const Ring& R, const Matrix& a);

}  // namespace templikit::coeff
