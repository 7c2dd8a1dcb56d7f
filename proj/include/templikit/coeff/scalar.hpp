#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace templikit::coeff {

/// Exact rational number with an inline 64-bit integer fast path.
///
/// Values that are integers fitting in int64 never allocate; everything else
/// (large integers, proper fractions) is held as a GMP rational. Results are
/// renormalised to the inline form whenever possible, so equality is a plain
/// value comparison.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : small_(v) {}           // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& q);
  explicit Scalar(const mpz_class& z);

  Scalar(const Scalar& other);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  /// Parses "123", "-7" or "3/4".
  static Scalar parse(std::string_view text);

  bool is_small() const { return !big_; }
  std::int64_t small() const { return small_; }
  bool is_integer() const;
  bool is_zero() const { return !big_ && small_ == 0; }
  int sign() const;

  mpq_class to_mpq() const;
  /// Requires is_integer().
  mpz_class to_mpz() const;
  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Exact rational quotient; b must be non-zero.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);

  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  /// Floor division and the matching non-negative remainder for integers
  /// (b > 0 gives 0 <= r < b).
  static Scalar floor_div(const Scalar& a, const Scalar& b);
  static Scalar floor_mod(const Scalar& a, const Scalar& b);
  /// Non-negative gcd of two integers.
  static Scalar gcd(const Scalar& a, const Scalar& b);

 private:
  void normalise();

  std::int64_t small_ = 0;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace templikit::coeff
