#include "templikit/coeff/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "templikit/errors.hpp"

namespace templikit::coeff {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw StructuralError("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = Scalar(rows[i][j]);
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw StructuralError("block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix b(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(idx[i], j);
  return b;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix b(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) b(i, j) = (*this)(i, idx[j]);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw StructuralError("block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw StructuralError("hstack: row counts differ");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw StructuralError("vstack: column counts differ");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Scalar(i == j ? 1 : 0)) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix mat_mul(const Ring& R, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw StructuralError("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  Matrix c(n, m);
  if (R.is_modular_integer()) {
    const std::int64_t mod = R.modulus();
    const bool narrow = mod < (std::int64_t{1} << 31);
    std::vector<__int128> acc(m);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t t = 0; t < k; ++t) {
        std::int64_t x = a(i, t).small();
        if (x == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
          std::int64_t y = b(t, j).small();
          if (y == 0) continue;
          if (narrow)
            acc[j] += static_cast<__int128>(x) * y;
          else
            acc[j] += R.local_mul(x, y);
        }
      }
      for (std::size_t j = 0; j < m; ++j) c(i, j) = Scalar(static_cast<std::int64_t>(acc[j] % mod));
    }
    return c;
  }
  if (R.kind() == RingKind::DualChain) {
    std::vector<std::int64_t> acc(m);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t t = 0; t < k; ++t) {
        std::int64_t x = a(i, t).small();
        if (x == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
          std::int64_t y = b(t, j).small();
          if (y == 0) continue;
          acc[j] = R.local_add(acc[j], R.local_mul(x, y));
        }
      }
      for (std::size_t j = 0; j < m; ++j) c(i, j) = Scalar(acc[j]);
    }
    return c;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      const Scalar& x = a(i, t);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        const Scalar& y = b(t, j);
        if (y.is_zero()) continue;
        c(i, j) += x * y;
      }
    }
  }
  return c;
}

Matrix mat_add(const Ring& R, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("matrix sum shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = R.add(a(i, j), b(i, j));
  return c;
}

Matrix mat_sub(const Ring& R, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("matrix difference shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = R.sub(a(i, j), b(i, j));
  return c;
}

Matrix mat_scale(const Ring& R, const Scalar& s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = R.mul(s, a(i, j));
  return c;
}

Matrix kron(const Ring& R, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& y = b(k, l);
          if (y.is_zero()) continue;
          c(i * b.rows() + k, j * b.cols() + l) = R.mul(x, y);
        }
    }
  return c;
}

Matrix mat_reduce(const Ring& R, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = R.reduce(a(i, j));
  return c;
}

}  // namespace templikit::coeff
