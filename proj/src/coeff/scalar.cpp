#include "templikit/coeff/scalar.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace templikit::coeff {

namespace {

bool fits_int64(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && sizeof(long) == sizeof(std::int64_t);
}

mpz_class mpz_from_int64(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

}  // namespace

Scalar::Scalar(const mpq_class& q) : big_(std::make_unique<mpq_class>(q)) {
  big_->canonicalize();
  normalise();
}

Scalar::Scalar(const mpz_class& z) : big_(std::make_unique<mpq_class>(z)) { normalise(); }

Scalar::Scalar(const Scalar& other)
    : small_(other.small_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this != &other) {
    small_ = other.small_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Scalar::normalise() {
  if (!big_) return;
  if (big_->get_den() == 1 && fits_int64(big_->get_num())) {
    small_ = big_->get_num().get_si();
    big_.reset();
  } else {
    small_ = 0;
  }
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed number: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return Scalar(q);
}

bool Scalar::is_integer() const { return !big_ || big_->get_den() == 1; }

int Scalar::sign() const {
  if (!big_) return (small_ > 0) - (small_ < 0);
  return sgn(*big_);
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_from_int64(small_));
}

mpz_class Scalar::to_mpz() const {
  if (!big_) return mpz_from_int64(small_);
  if (big_->get_den() != 1) throw std::domain_error("scalar is not an integer");
  return big_->get_num();
}

std::string Scalar::to_string() const {
  if (!big_) return std::to_string(small_);
  return big_->get_str(10);
}

Scalar Scalar::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Scalar(-small_);
  return Scalar(mpq_class(-to_mpq()));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(a.small_, b.small_, &r)) return Scalar(r);
  }
  return Scalar(mpq_class(a.to_mpq() + b.to_mpq()));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(a.small_, b.small_, &r)) return Scalar(r);
  }
  return Scalar(mpq_class(a.to_mpq() - b.to_mpq()));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &r)) return Scalar(r);
  }
  return Scalar(mpq_class(a.to_mpq() * b.to_mpq()));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_ && b.small_ != 0 && a.small_ % b.small_ == 0 &&
      !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
    return Scalar(a.small_ / b.small_);
  }
  return Scalar(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (!a.big_ || !b.big_) return false;  // both normalised
  return *a.big_ == *b.big_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) return a.small_ < b.small_;
  return a.to_mpq() < b.to_mpq();
}

Scalar Scalar::floor_div(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_) {
    std::int64_t q = a.small_ / b.small_;
    std::int64_t r = a.small_ % b.small_;
    if (r != 0 && ((r < 0) != (b.small_ < 0))) --q;
    if (!(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) return Scalar(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Scalar(q);
}

Scalar Scalar::floor_mod(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_) {
    std::int64_t r = a.small_ % b.small_;
    if (r != 0 && ((r < 0) != (b.small_ < 0))) r += b.small_;
    return Scalar(r);
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Scalar(r);
}

Scalar Scalar::gcd(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_ && a.small_ != std::numeric_limits<std::int64_t>::min() &&
      b.small_ != std::numeric_limits<std::int64_t>::min()) {
    return Scalar(std::gcd(a.small_, b.small_));
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Scalar(g);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace templikit::coeff
