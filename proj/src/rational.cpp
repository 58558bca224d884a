#include "spectra/rational.hpp"

#include <cctype>
#include <ostream>

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

BigInt abs_big(const BigInt& x) { return x.sign() < 0 ? BigInt(-x) : x; }

}  // namespace

Rational::Rational(BigInt p, BigInt q) : num_(std::move(p)), den_(std::move(q)) {
  if (den_.is_zero()) {
    throw InvalidInput("zero_denominator", "rational with zero denominator");
  }
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(abs_big(num_), den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

double Rational::to_double() const {
  // Going through a wide binary float keeps huge num/den from overflowing.
  using Wide = boost::multiprecision::cpp_bin_float_double_extended;
  return static_cast<double>(Wide(num_) / Wide(den_));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw InvalidInput("division_by_zero", "rational division by zero");
  }
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational reduce_rational(const BigInt& p, const BigInt& q) { return Rational(p, q); }

Rational parse_rational(std::string_view text) {
  auto bad = [&]() -> InvalidInput {
    return InvalidInput("bad_rational",
                        "expected an exact fraction \"p/q\", got \"" + std::string(text) + "\"");
  };
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view body = text.substr(b, e - b);

  auto parse_int = [&](std::string_view s, bool allow_sign) -> BigInt {
    std::size_t i = 0;
    bool neg = false;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) throw bad();
    BigInt v = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
      v = v * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-v) : v;
  };

  auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(body, true));
  BigInt p = parse_int(body.substr(0, slash), true);
  BigInt q = parse_int(body.substr(slash + 1), true);
  return Rational(p, q);
}

Rational frac(const Rational& r) {
  return Rational(mod_floor(r.num(), r.den()), r.den());
}

GcdResult extended_gcd(const BigInt& p, const BigInt& q) {
  if (p.is_zero() && q.is_zero()) {
    throw InvalidInput("gcd_of_zeros", "extended_gcd(0, 0) is undefined");
  }
  // Invariant: old_r == old_s*p + old_t*q and r == s*p + t*q.
  BigInt old_r = p, r = q;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (!r.is_zero()) {
    BigInt quot = old_r / r;
    BigInt tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  if (old_r.sign() < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs_big(a), abs_big(b));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return abs_big(a) / gcd(a, b) * abs_big(b);
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r.sign() < 0) r += m;
  return r;
}

}  // namespace spectra

std::size_t std::hash<spectra::Rational>::operator()(const spectra::Rational& r) const noexcept {
  std::size_t seed = boost::multiprecision::hash_value(r.num());
  boost::hash_combine(seed, boost::multiprecision::hash_value(r.den()));
  return seed;
}
