#include "templikit/coeff/ring.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

#include "templikit/errors.hpp"

namespace templikit::coeff {

namespace {

constexpr std::int64_t kModulusLimit = std::int64_t{1} << 62;

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  mpz_class z(static_cast<long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::int64_t parse_int64(const std::string& s) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw ConfigurationError("malformed integer: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw ConfigurationError("malformed integer: " + s);
  }
}

}  // namespace

Ring::Ring(RingKind kind, std::int64_t p, int m) : kind_(kind), p_(p), m_(m) {
  if (kind_ == RingKind::Integers || kind_ == RingKind::Rationals) {
    p_ = 0;
    m_ = 0;
    modulus_ = 0;
    return;
  }
  if (!is_prime(p)) throw ConfigurationError("ring characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw ConfigurationError("nilpotency index must be at least 1");
  if ((kind_ == RingKind::Chain || kind_ == RingKind::DualChain) && m == 1) kind_ = RingKind::PrimeField;
  if (kind_ == RingKind::PrimeField) m_ = 1;
  std::int64_t mod = 1;
  for (int i = 0; i < m_; ++i) {
    if (mod > kModulusLimit / p_) throw ConfigurationError("p^m must stay below 2^62");
    mod *= p_;
  }
  modulus_ = mod;
}

Ring Ring::integers() { return Ring(RingKind::Integers, 0, 0); }
Ring Ring::rationals() { return Ring(RingKind::Rationals, 0, 0); }
Ring Ring::prime_field(std::int64_t p) { return Ring(RingKind::PrimeField, p, 1); }
Ring Ring::chain(std::int64_t p, int m) { return Ring(RingKind::Chain, p, m); }
Ring Ring::dual_chain(std::int64_t p, int m) { return Ring(RingKind::DualChain, p, m); }

Ring Ring::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s == "Z" || s == "ZZ") return integers();
  if (s == "Q" || s == "QQ") return rationals();
  std::smatch mt;
  static const std::regex field_re(R"(^(?:F_?|GF\()(\d+)\)?$)");
  static const std::regex chain_re(R"(^Z/(\d+)(?:\^(\d+))?$)");
  static const std::regex dual_re(R"(^(?:F_?|GF\()(\d+)\)?\[(e|eps|ε)\]/\((e|eps|ε)\^(\d+)\)$)");
  if (std::regex_match(s, mt, dual_re)) {
    if (mt[2].str() != mt[3].str()) throw ConfigurationError("malformed ring descriptor: " + s);
    return dual_chain(parse_int64(mt[1].str()), static_cast<int>(parse_int64(mt[4].str())));
  }
  if (std::regex_match(s, mt, field_re) && (s[0] != 'G' || s.back() == ')')) {
    return prime_field(parse_int64(mt[1].str()));
  }
  if (std::regex_match(s, mt, chain_re)) {
    std::int64_t base = parse_int64(mt[1].str());
    if (mt[2].matched) return chain(base, static_cast<int>(parse_int64(mt[2].str())));
    if (base < 2) throw ConfigurationError("unsupported ring: " + s);
    std::int64_t q = base;
    std::int64_t prime = 0;
    for (std::int64_t d = 2; d * d <= q; ++d) {
      if (q % d == 0) {
        prime = d;
        break;
      }
    }
    if (prime == 0) prime = q;
    int m = 0;
    while (q % prime == 0) {
      q /= prime;
      ++m;
    }
    if (q != 1) throw ConfigurationError("Z/n is supported only for prime powers n, got " + s);
    return chain(prime, m);
  }
  throw ConfigurationError("unsupported ring: " + std::string(text));
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "F" + std::to_string(p_);
    case RingKind::Chain: return "Z/" + std::to_string(modulus_);
    case RingKind::DualChain: return "F" + std::to_string(p_) + "[e]/(e^" + std::to_string(m_) + ")";
  }
  return "?";
}

std::string Ring::kind_name() const {
  switch (kind_) {
    case RingKind::Integers: return "integers";
    case RingKind::Rationals: return "rationals";
    case RingKind::PrimeField: return "prime-field";
    case RingKind::Chain: return "chain";
    case RingKind::DualChain: return "dual-chain";
  }
  return "?";
}

std::int64_t Ring::power(int e) const {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p_;
  return r;
}

std::int64_t Ring::mod_small(std::int64_t x) const {
  std::int64_t r = x % modulus_;
  return r < 0 ? r + modulus_ : r;
}

std::int64_t Ring::mulmod(std::int64_t a, std::int64_t b) const {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % modulus_);
}

std::int64_t Ring::inv_mod(std::int64_t a, std::int64_t modulus) const {
  __int128 t = 0, nt = 1, r = modulus, nr = a % modulus;
  if (nr < 0) nr += modulus;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("element is not invertible");
  if (t < 0) t += modulus;
  return static_cast<std::int64_t>(t);
}

std::int64_t Ring::dual_add(std::int64_t a, std::int64_t b, bool subtract) const {
  std::int64_t out = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    std::int64_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    std::int64_t d = subtract ? (da - db + p_) % p_ : (da + db) % p_;
    out += d * place;
    place *= p_;
  }
  return out;
}

std::int64_t Ring::dual_mul(std::int64_t a, std::int64_t b) const {
  if (a == 0 || b == 0) return 0;
  std::int64_t da[64], db[64];
  for (int i = 0; i < m_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  std::int64_t out = 0, place = 1;
  for (int k = 0; k < m_; ++k) {
    __int128 acc = 0;
    for (int i = 0; i <= k; ++i) acc += static_cast<__int128>(da[i]) * db[k - i];
    out += static_cast<std::int64_t>(acc % p_) * place;
    place *= p_;
  }
  return out;
}

std::int64_t Ring::dual_inverse(std::int64_t a) const {
  std::int64_t da[64], inv[64];
  for (int i = 0; i < m_; ++i) {
    da[i] = a % p_;
    a /= p_;
  }
  if (da[0] == 0) throw std::domain_error("element is not invertible");
  std::int64_t c0 = inv_mod(da[0], p_);
  inv[0] = c0;
  for (int k = 1; k < m_; ++k) {
    __int128 acc = 0;
    for (int i = 1; i <= k; ++i) acc += static_cast<__int128>(da[i]) * inv[k - i];
    std::int64_t s = static_cast<std::int64_t>(acc % p_);
    inv[k] = static_cast<std::int64_t>((static_cast<__int128>(p_ - s) % p_ * c0) % p_);
  }
  std::int64_t out = 0, place = 1;
  for (int k = 0; k < m_; ++k) {
    out += inv[k] * place;
    place *= p_;
  }
  return out;
}

Scalar Ring::from_int(std::int64_t n) const {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals: return Scalar(n);
    case RingKind::DualChain: {
      std::int64_t r = n % p_;
      return Scalar(r < 0 ? r + p_ : r);
    }
    default: return Scalar(mod_small(n));
  }
}

Scalar Ring::uniformizer_power(int e) const {
  if (!is_local()) throw ConfigurationError("ring " + name() + " has no uniformizer");
  if (e < 0) throw RangeError("negative exponent");
  if (e >= m_) return Scalar(0);
  return Scalar(power(e));
}

Scalar Ring::reduce(const Scalar& x) const {
  switch (kind_) {
    case RingKind::Rationals: return x;
    case RingKind::Integers:
      if (!x.is_integer()) throw MismatchError("non-integral value " + x.to_string() + " over Z");
      return x;
    case RingKind::PrimeField:
    case RingKind::Chain: {
      if (x.is_small()) return Scalar(mod_small(x.small()));
      mpq_class q = x.to_mpq();
      mpz_class mod(static_cast<long>(modulus_));
      mpz_class num, den;
      mpz_fdiv_r(num.get_mpz_t(), q.get_num().get_mpz_t(), mod.get_mpz_t());
      mpz_fdiv_r(den.get_mpz_t(), q.get_den().get_mpz_t(), mod.get_mpz_t());
      std::int64_t n = num.get_si(), d = den.get_si();
      return Scalar(mulmod(n, inv_mod(d, modulus_)));
    }
    case RingKind::DualChain: {
      if (!x.is_integer()) throw MismatchError("non-integral encoding over " + name());
      if (x.is_small()) return Scalar(mod_small(x.small()));
      return Scalar::floor_mod(x, Scalar(modulus_));
    }
  }
  return x;
}

bool Ring::contains(const Scalar& x) const {
  switch (kind_) {
    case RingKind::Rationals: return true;
    case RingKind::Integers: return x.is_integer();
    default: return x.is_small() && x.small() >= 0 && x.small() < modulus_;
  }
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals: return a + b;
    case RingKind::DualChain: return Scalar(dual_add(a.small(), b.small(), false));
    default: {
      std::int64_t s = a.small() + b.small();
      return Scalar(s >= modulus_ ? s - modulus_ : s);
    }
  }
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals: return a - b;
    case RingKind::DualChain: return Scalar(dual_add(a.small(), b.small(), true));
    default: {
      std::int64_t s = a.small() - b.small();
      return Scalar(s < 0 ? s + modulus_ : s);
    }
  }
}

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals: return a * b;
    case RingKind::DualChain: return Scalar(dual_mul(a.small(), b.small()));
    default: return Scalar(mulmod(a.small(), b.small()));
  }
}

Scalar Ring::neg(const Scalar& a) const { return sub(zero(), a); }

bool Ring::is_unit(const Scalar& x) const {
  switch (kind_) {
    case RingKind::Integers: return x == Scalar(1) || x == Scalar(-1);
    case RingKind::Rationals: return !x.is_zero();
    default: return x.small() % p_ != 0;
  }
}

Scalar Ring::inverse(const Scalar& x) const {
  if (!is_unit(x)) throw std::domain_error(format_element(x) + " is not a unit in " + name());
  switch (kind_) {
    case RingKind::Integers: return x;
    case RingKind::Rationals: return Scalar(1) / x;
    case RingKind::DualChain: return Scalar(dual_inverse(x.small()));
    default: return Scalar(inv_mod(x.small(), modulus_));
  }
}

int Ring::valuation(const Scalar& x) const {
  if (!is_local()) throw ConfigurationError("valuation needs a local ring, got " + name());
  std::int64_t v = x.small();
  if (v == 0) return m_;
  int e = 0;
  while (v % p_ == 0) {
    v /= p_;
    ++e;
  }
  return e;
}

bool Ring::divides(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::Integers:
      if (a.is_zero()) return b.is_zero();
      return Scalar::floor_mod(b, a.abs()).is_zero();
    case RingKind::Rationals: return !a.is_zero() || b.is_zero();
    default: return valuation(a) <= valuation(b);
  }
}

Scalar Ring::exact_div(const Scalar& b, const Scalar& a) const {
  if (!divides(a, b)) throw std::domain_error(format_element(a) + " does not divide " + format_element(b));
  if (b.is_zero()) return zero();
  switch (kind_) {
    case RingKind::Integers: return Scalar::floor_div(b, a);
    case RingKind::Rationals: return b / a;
    default: {
      int s = valuation(a);
      std::int64_t shift = power(s);
      Scalar u(a.small() / shift);
      Scalar c(b.small() / shift);
      if (kind_ == RingKind::DualChain) return Scalar(dual_mul(c.small(), dual_inverse(u.small())));
      return Scalar(mulmod(c.small(), inv_mod(u.small(), modulus_)));
    }
  }
}

void Ring::divmod(const Scalar& a, const Scalar& b, Scalar& q, Scalar& r) const {
  if (b.is_zero()) throw std::domain_error("division by zero");
  switch (kind_) {
    case RingKind::Integers:
      q = Scalar::floor_div(a, b);
      r = a - q * b;
      return;
    case RingKind::Rationals:
      q = a / b;
      r = zero();
      return;
    default:
      if (valuation(b) <= valuation(a)) {
        q = exact_div(a, b);
        r = zero();
      } else {
        q = zero();
        r = a;
      }
  }
}

bool Ring::norm_less(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::Integers: return a.abs() < b.abs();
    case RingKind::Rationals: return false;
    default: return valuation(a) < valuation(b);
  }
}

Scalar Ring::ideal(const Scalar& a) const {
  switch (kind_) {
    case RingKind::Integers: return a.abs();
    case RingKind::Rationals: return a.is_zero() ? zero() : one();
    default: return uniformizer_power(valuation(a));
  }
}

Scalar Ring::reduce_mod(const Scalar& x, const Scalar& ann) const {
  switch (kind_) {
    case RingKind::Integers: {
      if (ann.is_zero()) return x;
      return Scalar::floor_mod(x, ann.abs());
    }
    case RingKind::Rationals: return ann.is_zero() ? x : zero();
    default: {
      int e = valuation(ann);
      if (e >= m_) return x;
      return Scalar(x.small() % power(e));
    }
  }
}

Scalar Ring::gcd(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::Integers: return Scalar::gcd(a, b);
    case RingKind::Rationals: return (a.is_zero() && b.is_zero()) ? zero() : one();
    default: return uniformizer_power(std::min(valuation(a), valuation(b)));
  }
}

Scalar Ring::colon(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::Integers:
      if (a.is_zero()) return b.is_zero() ? one() : zero();
      return Scalar::floor_div(a.abs(), Scalar::gcd(a, b));
    case RingKind::Rationals: return (!a.is_zero() || b.is_zero()) ? one() : zero();
    default: return uniformizer_power(std::max(0, valuation(a) - valuation(b)));
  }
}

Scalar Ring::normalizing_unit(const Scalar& x) const {
  if (x.is_zero()) return one();
  switch (kind_) {
    case RingKind::Integers: return x.sign() < 0 ? Scalar(-1) : one();
    case RingKind::Rationals: return Scalar(1) / x;
    default: {
      std::int64_t c = x.small() / power(valuation(x));
      if (kind_ == RingKind::DualChain) return Scalar(dual_inverse(c));
      return Scalar(inv_mod(c, modulus_));
    }
  }
}

Scalar Ring::parse_element(std::string_view text) const {
  std::string s = strip_spaces(text);
  if (s.empty()) throw ValidationError("empty ring element");
  if (kind_ != RingKind::DualChain) {
    Scalar v;
    try {
      v = Scalar::parse(s);
    } catch (const std::exception&) {
      throw ValidationError("malformed ring element '" + s + "' over " + name());
    }
    if (kind_ == RingKind::Integers && !v.is_integer())
      throw ValidationError("non-integral element '" + s + "' over Z");
    try {
      return reduce(v);
    } catch (const std::domain_error&) {
      throw ValidationError("element '" + s + "' is not defined over " + name());
    }
  }
  std::vector<std::int64_t> digits(m_, 0);
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (any) {
      throw ValidationError("malformed polynomial '" + s + "'");
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    i = j;
    if (term.empty()) throw ValidationError("malformed polynomial '" + s + "'");
    any = true;
    std::int64_t coeff = 1;
    int deg = 0;
    std::size_t epos = term.find('e');
    std::string cpart = epos == std::string::npos ? term : term.substr(0, epos);
    if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
    if (!cpart.empty()) {
      bool digits_only = std::all_of(cpart.begin(), cpart.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      if (!digits_only) throw ValidationError("malformed coefficient in '" + s + "'");
      coeff = static_cast<std::int64_t>(std::stoll(cpart) % p_);
    }
    if (epos != std::string::npos) {
      std::string rest = term.substr(epos + 1);
      if (rest.empty()) {
        deg = 1;
      } else if (rest[0] == '^' && rest.size() > 1 &&
                 std::all_of(rest.begin() + 1, rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        deg = std::stoi(rest.substr(1));
      } else {
        throw ValidationError("malformed power in '" + s + "'");
      }
    }
    if (deg < m_) digits[deg] = ((digits[deg] + sign * coeff) % p_ + p_) % p_;
  }
  std::int64_t out = 0, place = 1;
  for (int k = 0; k < m_; ++k) {
    out += digits[k] * place;
    place *= p_;
  }
  return Scalar(out);
}

std::string Ring::format_element(const Scalar& x) const {
  if (kind_ != RingKind::DualChain) return x.to_string();
  std::int64_t v = x.small();
  if (v == 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < m_; ++k) {
    std::int64_t d = v % p_;
    v /= p_;
    if (d == 0) continue;
    if (!first) os << '+';
    first = false;
    if (k == 0) {
      os << d;
      continue;
    }
    if (d != 1) os << d;
    os << 'e';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::string Ring::format_cyclic(const Scalar& ann) const {
  switch (kind_) {
    case RingKind::Integers:
      if (ann.is_zero()) return "Z";
      if (ann.abs() == Scalar(1)) return "0";
      return "Z/" + ann.abs().to_string();
    case RingKind::Rationals: return ann.is_zero() ? "Q" : "0";
    default: {
      int e = valuation(ann);
      if (e == 0) return "0";
      if (e == 1) return "F" + std::to_string(p_);
      if (kind_ == RingKind::DualChain) return "F" + std::to_string(p_) + "[e]/(e^" + std::to_string(e) + ")";
      return "Z/" + std::to_string(power(e));
    }
  }
}

}  // namespace templikit::coeff
