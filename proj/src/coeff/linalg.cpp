#include "templikit/coeff/linalg.hpp"

#include "templikit/errors.hpp"

namespace templikit::coeff {

namespace {

// [A | diag(ann_i) for the rows whose annihilator is non-zero]; rows with unit
// annihilator are dropped when drop_units is set (their constraint is void).
Matrix with_relations(const Ring& R, const Matrix& A, const Module& rows, bool drop_units,
                      std::vector<std::size_t>* kept_rows = nullptr) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rows.gens(); ++i)
    if (!(drop_units && R.is_unit(rows.ann(i)))) keep.push_back(i);
  std::vector<std::size_t> rel;
  for (std::size_t k = 0; k < keep.size(); ++k)
    if (!rows.ann(keep[k]).is_zero()) rel.push_back(k);
  Matrix out(keep.size(), A.cols() + rel.size());
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t j = 0; j < A.cols(); ++j) out(k, j) = A(keep[k], j);
  for (std::size_t t = 0; t < rel.size(); ++t) out(rel[t], A.cols() + t) = rows.ann(keep[rel[t]]);
  if (kept_rows) *kept_rows = std::move(keep);
  return out;
}

}  // namespace

Matrix kernel_basis(const Ring& R, const Matrix& A) {
  const std::size_t c = A.cols();
  if (c == 0) return Matrix(0, 0);
  SmithForm sf = smith_form(R, A, kRight);
  std::vector<std::pair<std::size_t, Scalar>> picks;
  for (std::size_t i = 0; i < c; ++i) {
    if (i < sf.rank) {
      Scalar a = R.annihilator(sf.diagonal[i]);
      if (a.is_zero()) continue;
      picks.emplace_back(i, a);
    } else {
      picks.emplace_back(i, Scalar(1));
    }
  }
  Matrix out(c, picks.size());
  for (std::size_t k = 0; k < picks.size(); ++k)
    for (std::size_t r = 0; r < c; ++r) out(r, k) = R.mul(picks[k].second, sf.Q(r, picks[k].first));
  return out;
}

std::optional<Matrix> solve_linear(const Ring& R, const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows()) throw StructuralError("solve: row counts differ");
  const std::size_t r = A.rows(), c = A.cols();
  if (r == 0) return Matrix(c, B.cols());
  SmithForm sf = smith_form(R, A, kLeft | kRight);
  Matrix PB = mat_mul(R, sf.P, B);
  Matrix Y(c, B.cols());
  for (std::size_t k = 0; k < B.cols(); ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      const Scalar& b = PB(i, k);
      if (i < sf.rank) {
        if (!R.divides(sf.diagonal[i], b)) return std::nullopt;
        Y(i, k) = R.exact_div(b, sf.diagonal[i]);
      } else if (!b.is_zero()) {
        return std::nullopt;
      }
    }
  }
  if (c == 0) return Matrix(0, B.cols());
  return mat_mul(R, sf.Q, Y);
}

Submodule submodule(const Module& M, const Matrix& gens) {
  const Ring& R = M.ring();
  if (gens.rows() != M.gens()) throw StructuralError("submodule generators have the wrong length");
  const std::size_t g = gens.cols();
  if (g == 0) {
    Module z = Module::zero(R);
    return {z, Morphism::zero(z, M)};
  }
  Matrix G = M.reduce_rows(gens);
  Matrix sys = with_relations(R, G, M, true);
  Matrix rel;
  if (sys.rows() == 0) {
    rel = Matrix::identity(g);
  } else {
    Matrix kb = kernel_basis(R, sys);
    rel = kb.block(0, 0, g, kb.cols());
  }
  SmithForm sf = smith_form(R, rel, kLeftInverse);
  std::vector<std::size_t> kept;
  std::vector<Scalar> anns;
  for (std::size_t i = 0; i < g; ++i) {
    Scalar a = i < sf.rank ? sf.diagonal[i] : Scalar(0);
    if (R.is_unit(a)) continue;
    kept.push_back(i);
    anns.push_back(a);
  }
  Module sub(R, anns);
  Matrix inc = mat_mul(R, G, sf.Pinv.select_cols(kept));
  return {sub, Morphism(sub, M, std::move(inc), Morphism::Unchecked{})};
}

Quotient quotient(const Module& M, const Matrix& gens) {
  const Ring& R = M.ring();
  if (gens.rows() != M.gens()) throw StructuralError("quotient generators have the wrong length");
  const std::size_t n = M.gens();
  Matrix sys = with_relations(R, M.reduce_rows(gens), M, false);
  SmithForm sf = smith_form(R, sys, kLeft | kLeftInverse);
  std::vector<std::size_t> kept;
  std::vector<Scalar> anns;
  for (std::size_t i = 0; i < n; ++i) {
    Scalar a = i < sf.rank ? sf.diagonal[i] : Scalar(0);
    if (R.is_unit(a)) continue;
    kept.push_back(i);
    anns.push_back(a);
  }
  Module q(R, anns);
  Matrix proj = sf.P.select_rows(kept);
  Matrix lift = M.reduce_rows(sf.Pinv.select_cols(kept));
  return {q, Morphism(M, q, std::move(proj), Morphism::Unchecked{}), std::move(lift)};
}

Submodule kernel(const Morphism& f) {
  const Ring& R = f.ring();
  const Module& M = f.domain();
  const std::size_t m = M.gens();
  if (m == 0) {
    Module z = Module::zero(R);
    return {z, Morphism::zero(z, M)};
  }
  Matrix sys = with_relations(R, f.matrix(), f.codomain(), true);
  Matrix G;
  if (sys.rows() == 0) {
    G = Matrix::identity(m);
  } else {
    Matrix kb = kernel_basis(R, sys);
    G = kb.block(0, 0, m, kb.cols());
  }
  return submodule(M, G);
}

Submodule image(const Morphism& f) { return submodule(f.codomain(), f.matrix()); }

Quotient cokernel(const Morphism& f) { return quotient(f.codomain(), f.matrix()); }

bool is_surjective(const Morphism& f) {
  const Ring& R = f.ring();
  Matrix sys = with_relations(R, f.matrix(), f.codomain(), true);
  if (sys.rows() == 0) return true;
  SmithForm sf = smith_form(R, sys, kNoTransform);
  if (sf.rank < sys.rows()) return false;
  for (std::size_t i = 0; i < sf.rank; ++i)
    if (!R.is_unit(sf.diagonal[i])) return false;
  return true;
}

bool is_injective(const Morphism& f) { return kernel(f).module.is_zero(); }

bool is_isomorphism(const Morphism& f) { return is_surjective(f) && is_injective(f); }

std::optional<Morphism> factor_through(const Morphism& a, const Morphism& b) {
  if (a.codomain() != b.codomain()) throw StructuralError("factor_through: codomains differ");
  const Ring& R = a.ring();
  const Module& L = a.domain();
  const Module& P = a.codomain();
  const Module& T = b.domain();
  const std::size_t l = L.gens();
  Matrix X(l, T.gens());
  Matrix base = with_relations(R, a.matrix(), P, false);

  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < T.gens(); ++j)
    if (T.ann(j).is_zero()) free_cols.push_back(j);
  if (!free_cols.empty()) {
    Matrix B = b.matrix().select_cols(free_cols);
    auto sol = solve_linear(R, base, B);
    if (!sol) return std::nullopt;
    for (std::size_t k = 0; k < free_cols.size(); ++k)
      for (std::size_t i = 0; i < l; ++i) X(i, free_cols[k]) = (*sol)(i, k);
  }
  for (std::size_t j = 0; j < T.gens(); ++j) {
    const Scalar& t = T.ann(j);
    if (t.is_zero() || R.is_unit(t)) continue;
    // [A D_P 0; t*I 0 D_L] (x; y; w) = (b_j; 0)
    Matrix lower_rel = with_relations(R, mat_scale(R, t, Matrix::identity(l)), L, false);
    std::size_t dl = lower_rel.cols() - l;
    std::size_t dp = base.cols() - l;
    Matrix sys(P.gens() + l, l + dp + dl);
    sys.set_block(0, 0, base);
    sys.set_block(P.gens(), 0, lower_rel.block(0, 0, l, l));
    sys.set_block(P.gens(), l + dp, lower_rel.block(0, l, l, dl));
    Matrix rhs(P.gens() + l, 1);
    for (std::size_t i = 0; i < P.gens(); ++i) rhs(i, 0) = b(i, j);
    auto sol = solve_linear(R, sys, rhs);
    if (!sol) return std::nullopt;
    for (std::size_t i = 0; i < l; ++i) X(i, j) = (*sol)(i, 0);
  }
  X = L.reduce_rows(X);
  if (!Morphism::congruence_violation(T, L, X).empty()) return std::nullopt;
  Morphism x(T, L, std::move(X));
  if (compose(a, x) != b) return std::nullopt;
  return x;
}

std::optional<Morphism> retraction(const Morphism& f) {
  const Ring& R = f.ring();
  const Module& M = f.domain();
  const Module& N = f.codomain();
  const std::size_t m = M.gens(), n = N.gens();
  Matrix r(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const Scalar& ai = M.ann(i);
    if (R.is_unit(ai)) continue;
    std::vector<Scalar> c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = R.colon(ai, N.ann(j));
    Matrix A(m, n + (ai.is_zero() ? 0 : m));
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < n; ++j) A(k, j) = R.mul(c[j], f(j, k));
      if (!ai.is_zero()) A(k, n + k) = ai;
    }
    Matrix rhs(m, 1);
    rhs(i, 0) = Scalar(1);
    auto sol = solve_linear(R, A, rhs);
    if (!sol) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) r(i, j) = R.mul(c[j], (*sol)(j, 0));
  }
  Morphism ret(N, M, std::move(r));
  if (compose(ret, f) != Morphism::identity(M)) throw std::logic_error("retraction solver produced a wrong answer");
  return ret;
}

Analysis analyze(const Morphism& f) {
  if (f.domain().ring() != f.codomain().ring()) throw MismatchError("morphism between modules over different rings");
  Analysis a{kernel(f), image(f), cokernel(f), false, false, false, std::nullopt};
  a.injective = a.kernel.module.is_zero();
  a.surjective = a.cokernel.module.is_zero();
  if (a.injective) {
    a.retraction = retraction(f);
    a.split_mono = a.retraction.has_value();
  }
  return a;
}

}  // namespace templikit::coeff
