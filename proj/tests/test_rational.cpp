#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spectra/errors.hpp"
#include "spectra/rational.hpp"

using spectra::BigInt;
using spectra::Rational;

TEST_CASE("reduce_rational normalizes") {
  CHECK(spectra::reduce_rational(4, 6) == Rational(2, 3));
  CHECK(spectra::reduce_rational(4, 6).str() == "2/3");
  CHECK(spectra::reduce_rational(2, 1).str() == "2");
  CHECK(spectra::reduce_rational(-3, -6).str() == "1/2");
  CHECK(spectra::reduce_rational(3, -6).str() == "-1/2");
  CHECK(spectra::reduce_rational(0, -7).den() == 1);
  CHECK_THROWS_AS(spectra::reduce_rational(1, 0), spectra::InvalidInput);
}

TEST_CASE("parse_rational accepts exact forms only") {
  CHECK(spectra::parse_rational("1/3") == Rational(1, 3));
  CHECK(spectra::parse_rational(" -10/4 ") == Rational(-5, 2));
  CHECK(spectra::parse_rational("7") == Rational(7));
  CHECK(spectra::parse_rational("2/-4") == Rational(-1, 2));
  CHECK_THROWS_AS(spectra::parse_rational("0.5"), spectra::InvalidInput);
  CHECK_THROWS_AS(spectra::parse_rational("1e3"), spectra::InvalidInput);
  CHECK_THROWS_AS(spectra::parse_rational("1/"), spectra::InvalidInput);
  CHECK_THROWS_AS(spectra::parse_rational(""), spectra::InvalidInput);
  CHECK_THROWS_AS(spectra::parse_rational("3/0"), spectra::InvalidInput);
}

TEST_CASE("arithmetic and ordering") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(b < a);
  CHECK(-a < b);
  CHECK(spectra::frac(Rational(-1, 3)) == Rational(2, 3));
  CHECK(spectra::frac(Rational(7, 2)) == Rational(1, 2));
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(a / Rational(0), spectra::InvalidInput);
}

TEST_CASE("extended_gcd examples") {
  auto r = spectra::extended_gcd(2, 1);
  CHECK(r.g == 1);
  CHECK(r.k * 2 + r.l * 1 == 1);
  CHECK(r.k == 0);
  CHECK(r.l == 1);

  r = spectra::extended_gcd(3, 5);
  CHECK(r.g == 1);
  CHECK(r.k * 3 + r.l * 5 == 1);

  r = spectra::extended_gcd(6, 4);
  CHECK(r.g == 2);
  CHECK(r.k * 6 + r.l * 4 == 2);

  CHECK_THROWS_AS(spectra::extended_gcd(0, 0), spectra::InvalidInput);
}

TEST_CASE("extended_gcd Bezout identity holds for random inputs") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<long long> dist(-100000, 100000);
  for (int i = 0; i < 2000; ++i) {
    BigInt p = dist(rng), q = dist(rng);
    if (p.is_zero() && q.is_zero()) continue;
    auto r = spectra::extended_gcd(p, q);
    CHECK(r.g > 0);
    CHECK(r.k * p + r.l * q == r.g);
    CHECK(p % r.g == 0);
    CHECK(q % r.g == 0);
  }
}

TEST_CASE("reduced form invariant under random construction") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-500, 500);
  for (int i = 0; i < 2000; ++i) {
    long long p = dist(rng), q = dist(rng);
    if (q == 0) continue;
    Rational r(p, q);
    CHECK(r.den() >= 1);
    CHECK(spectra::gcd(r.num(), r.den()) == 1);
    CHECK(r.num() * q == BigInt(p) * r.den());
  }
}
