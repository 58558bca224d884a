#ifndef SPECTRA_RATIONAL_HPP
#define SPECTRA_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace spectra {

using BigInt = boost::multiprecision::cpp_int;

// Exact reduced fraction. Invariants: gcd(|num|, den) == 1, den >= 1,
// zero is 0/1. The sign always lives in the numerator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(implicit)

  // Reduces p/q. Throws InvalidInput("zero_denominator") when q == 0.
  Rational(BigInt p, BigInt q);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  double to_double() const;

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational reduce_rational(const BigInt& p, const BigInt& q);

// Parses "p", "p/q", "-p/q" (optional surrounding whitespace). Decimal points
// and exponents are rejected: inputs must be exact.
Rational parse_rational(std::string_view text);

// Fractional part in [0, 1).
Rational frac(const Rational& r);

struct GcdResult {
  BigInt g;
  BigInt k;
  BigInt l;
};

// g = gcd(p, q) > 0 with k*p + l*q == g. Throws InvalidInput on (0, 0).
GcdResult extended_gcd(const BigInt& p, const BigInt& q);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Floor-mod with a result in [0, m) for m > 0.
BigInt mod_floor(const BigInt& a, const BigInt& m);

}  // namespace spectra

template <>
struct std::hash<spectra::Rational> {
  std::size_t operator()(const spectra::Rational& r) const noexcept;
};

#endif  // SPECTRA_RATIONAL_HPP
