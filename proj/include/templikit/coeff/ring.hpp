#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "templikit/coeff/scalar.hpp"

namespace templikit::coeff {

enum class RingKind { Integers, Rationals, PrimeField, Chain, DualChain };

/// A supported exact coefficient ring.
///
/// Elements are Scalars in canonical form:
///   Integers   any integer
///   Rationals  any rational
///   PrimeField integer in [0, p)
///   Chain      Z/p^m, integer in [0, p^m)
///   DualChain  F_p[e]/(e^m), the polynomial c_0 + c_1 e + ... encoded as the
///              integer sum c_i p^i, hence also in [0, p^m)
///
/// Chain(p, 1) and DualChain(p, 1) are normalised to PrimeField(p). For the
/// three local kinds the uniformizer is p (resp. e) and every non-zero element
/// is a unit times a power of it; the encoding above makes the power
/// uniformizer^e equal to the integer p^e in both cases.
///
/// Module annihilators ("factors") use canonical ideal generators:
/// non-negative integers over Z, 0 or 1 over a field, uniformizer^e (reduced,
/// so exponent m becomes 0) over the chain kinds. The zero ideal means a free
/// summand; the unit ideal a trivial one.
class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  static Ring prime_field(std::int64_t p);
  static Ring chain(std::int64_t p, int m);
  static Ring dual_chain(std::int64_t p, int m);
  /// Accepts "Z", "Q", "F3", "F_3", "GF(3)", "Z/8", "F2[e]/(e^2)".
  static Ring parse(std::string_view text);

  RingKind kind() const { return kind_; }
  std::int64_t p() const { return p_; }
  /// Nilpotency index of the maximal ideal; 1 for prime fields, 0 for Z and Q.
  int m() const { return m_; }
  /// p^m for the local kinds.
  std::int64_t modulus() const { return modulus_; }
  std::string name() const;
  std::string kind_name() const;

  bool is_field() const { return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField; }
  /// Prime field, Z/p^m or F_p[e]/(e^m).
  bool is_local() const {
    return kind_ == RingKind::PrimeField || kind_ == RingKind::Chain || kind_ == RingKind::DualChain;
  }
  /// Element arithmetic stays inside int64 and reduces modulo p^m.
  bool is_modular_integer() const { return kind_ == RingKind::PrimeField || kind_ == RingKind::Chain; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(std::int64_t n) const;
  /// uniformizer^e in canonical form (0 once e >= m).
  Scalar uniformizer_power(int e) const;

  /// Canonical representative of an arbitrary value of the ambient encoding
  /// (integer or rational) interpreted as an element of the ring.
  Scalar reduce(const Scalar& x) const;
  bool contains(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;

  bool is_unit(const Scalar& x) const;
  Scalar inverse(const Scalar& x) const;

  /// Exponent of the uniformizer dividing x (m for zero). Local kinds only.
  int valuation(const Scalar& x) const;
  /// For an ideal generator: m for 0, the valuation otherwise. Local kinds only.
  int exponent(const Scalar& ann) const { return valuation(ann); }

  bool divides(const Scalar& a, const Scalar& b) const;
  /// Some q with a*q = b; requires divides(a, b).
  Scalar exact_div(const Scalar& b, const Scalar& a) const;
  /// Division with remainder for pivoting: b != 0, r == 0 or norm(r) < norm(b).
  void divmod(const Scalar& a, const Scalar& b, Scalar& q, Scalar& r) const;
  /// Strict comparison of the pivoting norm (|x| over Z, valuation on the
  /// local kinds, constant over Q).
  bool norm_less(const Scalar& a, const Scalar& b) const;

  /// Canonical generator of the ideal (a).
  Scalar ideal(const Scalar& a) const;
  /// Canonical representative of x modulo the ideal generated by ann.
  Scalar reduce_mod(const Scalar& x, const Scalar& ann) const;
  /// Generator of (a) + (b).
  Scalar gcd(const Scalar& a, const Scalar& b) const;
  /// Generator of the colon ideal (a : b) = { r : r b in (a) }.
  Scalar colon(const Scalar& a, const Scalar& b) const;
  /// Generator of Ann(d) = (0 : d).
  Scalar annihilator(const Scalar& d) const { return colon(zero(), d); }
  /// A unit u such that u * x = ideal(x).
  Scalar normalizing_unit(const Scalar& x) const;

  Scalar parse_element(std::string_view text) const;
  std::string format_element(const Scalar& x) const;

  /// Human readable cyclic module R/(ann), e.g. "Z/2", "F3", "F2[e]/(e^2)", "0".
  std::string format_cyclic(const Scalar& ann) const;

  /// Raw int64 arithmetic for the local kinds, on canonical encodings.
  std::int64_t local_add(std::int64_t a, std::int64_t b) const {
    if (kind_ == RingKind::DualChain) return dual_add(a, b, false);
    std::int64_t s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  std::int64_t local_sub(std::int64_t a, std::int64_t b) const {
    if (kind_ == RingKind::DualChain) return dual_add(a, b, true);
    std::int64_t s = a - b;
    return s < 0 ? s + modulus_ : s;
  }
  std::int64_t local_mul(std::int64_t a, std::int64_t b) const {
    if (kind_ == RingKind::DualChain) return dual_mul(a, b);
    return mulmod(a, b);
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.m_ == b.m_;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  Ring(RingKind kind, std::int64_t p, int m);

  std::int64_t mod_small(std::int64_t x) const;
  std::int64_t mulmod(std::int64_t a, std::int64_t b) const;
  std::int64_t inv_mod(std::int64_t a, std::int64_t modulus) const;
  std::int64_t dual_mul(std::int64_t a, std::int64_t b) const;
  std::int64_t dual_add(std::int64_t a, std::int64_t b, bool subtract) const;
  std::int64_t dual_inverse(std::int64_t a) const;
  std::int64_t power(int e) const;

  RingKind kind_;
  std::int64_t p_ = 0;
  int m_ = 0;
  std::int64_t modulus_ = 0;
};

}  // namespace templikit::coeff
