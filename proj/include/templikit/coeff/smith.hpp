#pragma once

#include <vector>

#include "templikit/coeff/matrix.hpp"

namespace templikit::coeff {

enum SmithTransform : unsigned {
  kNoTransform = 0,
  kLeft = 1,
  kLeftInverse = 2,
  kRight = 4,
  kRightInverse = 8,
  kAllTransforms = 15,
};

/// D = P * A * Q with P, Q invertible and D diagonal, nonzero entries first,
/// each a canonical ideal generator dividing the next. Equivalently
/// A = left() * D * right() with left() = P^-1 and right() = Q^-1.
///
/// Pivoting is deterministic: smallest norm (|x| over Z, valuation on the
/// chain kinds), then lowest row, then lowest column.
struct SmithForm {
  Matrix D;
  std::vector<Scalar> diagonal;  // length min(rows, cols)
  std::size_t rank = 0;          // number of nonzero diagonal entries
  Matrix P, Pinv, Q, Qinv;       // only those requested are filled

  const Matrix& left() const { return Pinv; }
  const Matrix& right() const { return Qinv; }
};

SmithForm smith_form(const Ring& R, const Matrix& A, unsigned transforms = kAllTransforms);

}  // namespace templikit::coeff
