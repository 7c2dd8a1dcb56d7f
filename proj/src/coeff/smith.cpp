#include "templikit/coeff/smith.hpp"

#include <utility>

#include "templikit/errors.hpp"

namespace templikit::coeff {

namespace {

struct LocalOps {
  using V = std::int64_t;
  static constexpr bool kEuclid = false;

  const Ring& R;
  std::int64_t p;
  int m;

  explicit LocalOps(const Ring& r) : R(r), p(r.p()), m(r.m()) {}

  V from(const Scalar& s) const { return R.reduce(s).small(); }
  Scalar to(V v) const { return Scalar(v); }
  bool is_zero(V v) const { return v == 0; }
  V add(V a, V b) const { return R.local_add(a, b); }
  V sub(V a, V b) const { return R.local_sub(a, b); }
  V mul(V a, V b) const { return R.local_mul(a, b); }
  V neg(V a) const { return R.local_sub(0, a); }

  int val(V x) const {
    if (x == 0) return m;
    if (p == 2) return __builtin_ctzll(static_cast<unsigned long long>(x));
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    return e;
  }
  bool norm_less(V a, V b) const { return val(a) < val(b); }
  bool minimal(V a) const { return a % p != 0; }
  bool is_power_of_p(V b) const {
    while (b % p == 0) b /= p;
    return b == 1;
  }
  void divmod(V a, V b, V& q, V& r) const {
    if (val(b) <= val(a)) {
      q = is_power_of_p(b) ? a / b : R.exact_div(Scalar(a), Scalar(b)).small();
      r = 0;
    } else {
      q = 0;
      r = a;
    }
  }
  bool divides(V a, V b) const { return val(a) <= val(b); }
  V normalizing_unit(V x) const { return R.normalizing_unit(Scalar(x)).small(); }
  V inverse(V u) const { return R.inverse(Scalar(u)).small(); }
  V one() const { return 1; }
  V zero() const { return 0; }
};

struct GenericOps {
  using V = Scalar;
  static constexpr bool kEuclid = true;

  const Ring& R;
  bool field;

  explicit GenericOps(const Ring& r) : R(r), field(r.kind() == RingKind::Rationals) {}

  V from(const Scalar& s) const { return R.reduce(s); }
  Scalar to(const V& v) const { return v; }
  bool is_zero(const V& v) const { return v.is_zero(); }
  V add(const V& a, const V& b) const { return a + b; }
  V sub(const V& a, const V& b) const { return a - b; }
  V mul(const V& a, const V& b) const { return a * b; }
  V neg(const V& a) const { return -a; }
  bool norm_less(const V& a, const V& b) const { return !field && a.abs() < b.abs(); }
  bool minimal(const V& a) const { return field || a.abs() == Scalar(1); }
  void divmod(const V& a, const V& b, V& q, V& r) const { R.divmod(a, b, q, r); }
  bool divides(const V& a, const V& b) const { return R.divides(a, b); }
  V normalizing_unit(const V& x) const { return R.normalizing_unit(x); }
  V inverse(const V& u) const { return R.inverse(u); }
  V one() const { return Scalar(1); }
  V zero() const { return Scalar(0); }
};

template <class Ops>
class Reducer {
 public:
  using V = typename Ops::V;

  Reducer(const Ops& ops, const Matrix& A, unsigned want)
      : ops_(ops), r_(A.rows()), c_(A.cols()), a_(r_ * c_), want_(want) {
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) a_[i * c_ + j] = ops.from(A(i, j));
    if (want_ & kLeft) P_ = ident(r_);
    if (want_ & kLeftInverse) Pinv_ = ident(r_);
    if (want_ & kRight) Q_ = ident(c_);
    if (want_ & kRightInverse) Qinv_ = ident(c_);
  }

  SmithForm run() {
    const std::size_t n = std::min(r_, c_);
    std::size_t t = 0;
    for (; t < n; ++t) {
      if (!place_pivot(t)) break;
      normalize(t);
      for (;;) {
        bool changed = false;
        for (std::size_t i = t + 1; i < r_; ++i) {
          if (ops_.is_zero(at(i, t))) continue;
          V q, rem;
          ops_.divmod(at(i, t), at(t, t), q, rem);
          row_addmul(i, t, q, t);
          if (!ops_.is_zero(at(i, t))) {
            swap_rows(i, t);
            changed = true;
          }
        }
        for (std::size_t j = t + 1; j < c_; ++j) {
          if (ops_.is_zero(at(t, j))) continue;
          V q, rem;
          ops_.divmod(at(t, j), at(t, t), q, rem);
          col_addmul(j, t, q, t);
          if (!ops_.is_zero(at(t, j))) {
            swap_cols(j, t);
            changed = true;
          }
        }
        if (changed) continue;
        if constexpr (Ops::kEuclid) {
          if (fix_divisibility(t)) continue;
        }
        break;
      }
      normalize(t);
    }
    SmithForm out;
    out.rank = t;
    out.D = Matrix(r_, c_);
    out.diagonal.assign(n, Scalar(0));
    for (std::size_t i = 0; i < t; ++i) {
      out.diagonal[i] = ops_.to(at(i, i));
      out.D(i, i) = out.diagonal[i];
    }
    if (want_ & kLeft) out.P = to_matrix(P_, r_, r_);
    if (want_ & kLeftInverse) out.Pinv = to_matrix(Pinv_, r_, r_);
    if (want_ & kRight) out.Q = to_matrix(Q_, c_, c_);
    if (want_ & kRightInverse) out.Qinv = to_matrix(Qinv_, c_, c_);
    return out;
  }

 private:
  V& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }

  std::vector<V> ident(std::size_t n) const {
    std::vector<V> m(n * n, ops_.zero());
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = ops_.one();
    return m;
  }

  Matrix to_matrix(const std::vector<V>& m, std::size_t nr, std::size_t nc) const {
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = ops_.to(m[i * nc + j]);
    return out;
  }

  bool place_pivot(std::size_t t) {
    bool found = false;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = t; i < r_ && !(found && ops_.minimal(at(bi, bj))); ++i) {
      for (std::size_t j = t; j < c_; ++j) {
        const V& x = at(i, j);
        if (ops_.is_zero(x)) continue;
        if (!found || ops_.norm_less(x, at(bi, bj))) {
          found = true;
          bi = i;
          bj = j;
          if (ops_.minimal(x)) break;
        }
      }
    }
    if (!found) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  void normalize(std::size_t t) {
    V u = ops_.normalizing_unit(at(t, t));
    if (u == ops_.one()) return;
    V uinv = ops_.inverse(u);
    for (std::size_t j = t; j < c_; ++j) at(t, j) = ops_.mul(u, at(t, j));
    if (want_ & kLeft)
      for (std::size_t j = 0; j < r_; ++j) P_[t * r_ + j] = ops_.mul(u, P_[t * r_ + j]);
    if (want_ & kLeftInverse)
      for (std::size_t i = 0; i < r_; ++i) Pinv_[i * r_ + t] = ops_.mul(Pinv_[i * r_ + t], uinv);
  }

  // row_i -= q * row_k
  void row_addmul(std::size_t i, std::size_t k, const V& q, std::size_t from_col) {
    if (ops_.is_zero(q)) return;
    for (std::size_t j = from_col; j < c_; ++j) {
      const V& x = at(k, j);
      if (!ops_.is_zero(x)) at(i, j) = ops_.sub(at(i, j), ops_.mul(q, x));
    }
    if (want_ & kLeft)
      for (std::size_t j = 0; j < r_; ++j) {
        const V& x = P_[k * r_ + j];
        if (!ops_.is_zero(x)) P_[i * r_ + j] = ops_.sub(P_[i * r_ + j], ops_.mul(q, x));
      }
    if (want_ & kLeftInverse)
      for (std::size_t l = 0; l < r_; ++l) {
        const V& x = Pinv_[l * r_ + i];
        if (!ops_.is_zero(x)) Pinv_[l * r_ + k] = ops_.add(Pinv_[l * r_ + k], ops_.mul(q, x));
      }
  }

  // col_j -= q * col_k
  void col_addmul(std::size_t j, std::size_t k, const V& q, std::size_t from_row) {
    if (ops_.is_zero(q)) return;
    for (std::size_t i = from_row; i < r_; ++i) {
      const V& x = at(i, k);
      if (!ops_.is_zero(x)) at(i, j) = ops_.sub(at(i, j), ops_.mul(q, x));
    }
    if (want_ & kRight)
      for (std::size_t l = 0; l < c_; ++l) {
        const V& x = Q_[l * c_ + k];
        if (!ops_.is_zero(x)) Q_[l * c_ + j] = ops_.sub(Q_[l * c_ + j], ops_.mul(q, x));
      }
    if (want_ & kRightInverse)
      for (std::size_t l = 0; l < c_; ++l) {
        const V& x = Qinv_[j * c_ + l];
        if (!ops_.is_zero(x)) Qinv_[k * c_ + l] = ops_.add(Qinv_[k * c_ + l], ops_.mul(q, x));
      }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < c_; ++j) std::swap(at(i, j), at(k, j));
    if (want_ & kLeft)
      for (std::size_t j = 0; j < r_; ++j) std::swap(P_[i * r_ + j], P_[k * r_ + j]);
    if (want_ & kLeftInverse)
      for (std::size_t l = 0; l < r_; ++l) std::swap(Pinv_[l * r_ + i], Pinv_[l * r_ + k]);
  }

  void swap_cols(std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < r_; ++i) std::swap(at(i, j), at(i, k));
    if (want_ & kRight)
      for (std::size_t l = 0; l < c_; ++l) std::swap(Q_[l * c_ + j], Q_[l * c_ + k]);
    if (want_ & kRightInverse)
      for (std::size_t l = 0; l < c_; ++l) std::swap(Qinv_[j * c_ + l], Qinv_[k * c_ + l]);
  }

  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < r_; ++i)
      for (std::size_t j = t + 1; j < c_; ++j) {
        const V& x = at(i, j);
        if (!ops_.is_zero(x) && !ops_.divides(at(t, t), x)) {
          row_addmul(t, i, ops_.neg(ops_.one()), t);
          return true;
        }
      }
    return false;
  }

  const Ops& ops_;
  std::size_t r_, c_;
  std::vector<V> a_;
  unsigned want_;
  std::vector<V> P_, Pinv_, Q_, Qinv_;
};

}  // namespace

SmithForm smith_form(const Ring& R, const Matrix& A, unsigned transforms) {
  if (R.is_local()) {
    LocalOps ops(R);
    return Reducer<LocalOps>(ops, A, transforms).run();
  }
  GenericOps ops(R);
  return Reducer<GenericOps>(ops, A, transforms).run();
}

}  // namespace templikit::coeff
