#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/finite_spectral.hpp"

using spectra::BigInt;
using spectra::FiniteRationalSet;
using spectra::IrrationalTag;
using spectra::Rational;
using spectra::Verdict;

namespace {

FiniteRationalSet set(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (const char* x : xs) v.push_back(spectra::parse_rational(x));
  return FiniteRationalSet(std::move(v));
}

// Oracle: (1/sqrt n) (exp(2 pi i a b)) is unitary, checked in floating point.
bool numerically_unitary(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::complex<double> s = 0.0;
      for (double x : a) s += std::polar(1.0, 2 * std::numbers::pi * x * (b[j] - b[i]));
      if (std::abs(s) > 1e-9) return false;
    }
  }
  return true;
}

std::vector<double> doubles(const FiniteRationalSet& s) {
  std::vector<double> v;
  for (const auto& r : s) v.push_back(r.to_double());
  return v;
}

// Oracle for search_spectrum: enumerate every candidate tuple directly.
std::optional<std::vector<Rational>> brute_force_search(const FiniteRationalSet& a, int q_max,
                                                        const Rational& span) {
  std::vector<Rational> grid;
  for (int v = 1; v <= q_max; ++v) {
    for (int u = 0; Rational(u, v) < span; ++u) {
      Rational r(u, v);
      if (std::find(grid.begin(), grid.end(), r) == grid.end()) grid.push_back(r);
    }
  }
  std::sort(grid.begin(), grid.end());
  const std::size_t k = a.size();
  std::vector<std::size_t> idx(k);
  std::vector<double> ad = doubles(a);
  // idx[0] = 0 (the element 0); remaining strictly increasing.
  std::function<std::optional<std::vector<Rational>>(std::size_t, std::size_t)> rec =
      [&](std::size_t depth, std::size_t from) -> std::optional<std::vector<Rational>> {
    if (depth == k) {
      std::vector<double> bd;
      std::vector<Rational> b;
      for (std::size_t i : idx) {
        bd.push_back(grid[i].to_double());
        b.push_back(grid[i]);
      }
      if (numerically_unitary(ad, bd)) return b;
      return std::nullopt;
    }
    for (std::size_t i = from; i < grid.size(); ++i) {
      idx[depth] = i;
      if (auto r = rec(depth + 1, i + 1)) return r;
    }
    return std::nullopt;
  };
  idx[0] = 0;
  return rec(1, 1);
}

}  // namespace

TEST_CASE("FiniteRationalSet invariants") {
  auto s = set({"1", "0", "1/2"});
  CHECK(s[0] == Rational(0));
  CHECK(s[1] == Rational(1, 2));
  CHECK(s[2] == Rational(1));
  CHECK(s.contains(Rational(1, 2)));
  CHECK_THROWS_AS(set({"1/2", "2/4"}), spectra::InvalidInput);
  CHECK_THROWS_AS(FiniteRationalSet({}), spectra::InvalidInput);
}

TEST_CASE("is_spectral_pair examples") {
  CHECK(spectra::is_spectral_pair(set({"0", "1"}), set({"0", "1/2"})));
  CHECK(spectra::is_spectral_pair(set({"0", "1", "2"}), set({"0", "1/3", "2/3"})));
  CHECK(numerically_unitary({0, 1, 2}, {0, 1.0 / 3, 2.0 / 3}));
  CHECK_FALSE(spectra::is_spectral_pair(set({"0", "1", "3"}), set({"0", "1/3", "2/3"})));
  CHECK_FALSE(numerically_unitary({0, 1, 3}, {0, 1.0 / 3, 2.0 / 3}));
  CHECK_THROWS_AS(spectra::is_spectral_pair(set({"0"}), set({"0", "1"})), spectra::InvalidInput);

  auto cert = spectra::certify_spectral_pair(set({"0", "1", "2"}), set({"0", "1/3", "2/3"}));
  CHECK(cert.exact);
  CHECK(cert.max_order == 3);
}

TEST_CASE("exact test falls back to floating point past the order cap") {
  // Denominator 1000003 (prime) exceeds the cap.
  auto a = set({"0", "1"});
  auto b = FiniteRationalSet({Rational(0), Rational(1, 2) + Rational(1, 1000003)});
  auto cert = spectra::certify_spectral_pair(a, b);
  CHECK_FALSE(cert.exact);
  CHECK_FALSE(cert.spectral);
  auto a2 = FiniteRationalSet({Rational(0), Rational(1000003)});
  auto b2 = FiniteRationalSet({Rational(0), Rational(1, 2000006)});
  auto cert2 = spectra::certify_spectral_pair(a2, b2);
  CHECK(cert2.exact);
  CHECK(cert2.spectral);
}

TEST_CASE("decide_line_set examples") {
  auto d = spectra::decide_line_set(3, Rational(2));
  CHECK(d.verdict == Verdict::spectral);
  REQUIRE(d.certificate);
  CHECK(*d.certificate == set({"0", "1/3", "2/3"}));

  d = spectra::decide_line_set(3, Rational(1, 3));
  CHECK(d.verdict == Verdict::not_spectral);
  CHECK(d.reason == spectra::NegativeReason::congruence_fails);
  CHECK_FALSE(d.certificate);

  d = spectra::decide_line_set(3, IrrationalTag{"sqrt2"});
  CHECK(d.verdict == Verdict::not_spectral);
  CHECK(d.reason == spectra::NegativeReason::irrational);

  d = spectra::decide_line_set(4, Rational(3));
  CHECK(d.verdict == Verdict::spectral);
  CHECK(*d.certificate == set({"0", "1/4", "1/2", "3/4"}));

  CHECK_THROWS_AS(spectra::decide_line_set(3, Rational(1)), spectra::InvalidInput);
  CHECK_THROWS_AS(spectra::decide_line_set(5, Rational(3)), spectra::InvalidInput);
  CHECK_THROWS_AS(spectra::decide_line_set(2, Rational(1, 2)), spectra::InvalidInput);
  CHECK_NOTHROW(spectra::decide_line_set(5, Rational(4)));
}

TEST_CASE("decide_three_point examples") {
  CHECK(spectra::decide_three_point(Rational(1, 2)).verdict == Verdict::spectral);
  CHECK(spectra::decide_three_point(Rational(5)).verdict == Verdict::spectral);
  CHECK(spectra::decide_three_point(Rational(3)).verdict == Verdict::not_spectral);
  // -1 + 1 = 0: A = {-1, 0, 1} is a translate of {0, 1, 2}.
  CHECK(spectra::decide_three_point(Rational(-1)).verdict == Verdict::spectral);
  CHECK_THROWS_AS(spectra::decide_three_point(Rational(0)), spectra::InvalidInput);
}

TEST_CASE("decision is independent of the unreduced representation") {
  for (int k = 1; k <= 6; ++k) {
    for (int p = -12; p <= 12; ++p) {
      for (int q = 1; q <= 6; ++q) {
        Rational a(BigInt(p * k), BigInt(q * k));
        if (a == Rational(0) || a == Rational(1)) continue;
        auto d1 = spectra::decide_three_point(a);
        auto d2 = spectra::decide_three_point(spectra::parse_rational(std::to_string(p * k) + "/" +
                                                                      std::to_string(q * k)));
        CHECK(d1.verdict == d2.verdict);
      }
    }
  }
}

TEST_CASE("construct_line_spectrum examples") {
  CHECK(spectra::construct_line_spectrum(3, 2, 1) == set({"0", "1/3", "2/3"}));
  CHECK(spectra::construct_line_spectrum(3, 1, 2) == set({"0", "2/3", "4/3"}));
  CHECK(spectra::construct_line_spectrum(4, 3, 1) == set({"0", "1/4", "1/2", "3/4"}));
  CHECK(spectra::is_spectral_pair(set({"0", "1", "1/2"}), set({"0", "2/3", "4/3"})));
  CHECK(spectra::is_spectral_pair(set({"0", "1", "2", "3"}), set({"0", "1/4", "1/2", "3/4"})));
  CHECK_THROWS_AS(spectra::construct_line_spectrum(3, 1, 1), spectra::InvalidInput);
  CHECK_THROWS_AS(spectra::construct_line_spectrum(3, 2, 4), spectra::InvalidInput);
}

TEST_CASE("search_spectrum examples agree with brute force") {
  auto r = spectra::search_spectrum(set({"0", "1"}), 2, Rational(1));
  REQUIRE(r);
  CHECK(*r == set({"0", "1/2"}));

  r = spectra::search_spectrum(set({"0", "1", "3"}), 12, Rational(2));
  CHECK_FALSE(r);
  CHECK_FALSE(brute_force_search(set({"0", "1", "3"}), 12, Rational(2)));

  r = spectra::search_spectrum(set({"0", "1", "2"}), 3, Rational(1));
  REQUIRE(r);
  CHECK(*r == set({"0", "1/3", "2/3"}));

  for (const char* a : {"1/2", "5", "-1/2", "2/5", "-4"}) {
    auto A = set({"0", "1", a});
    auto fast = spectra::search_spectrum(A, 6, Rational(2));
    auto slow = brute_force_search(A, 6, Rational(2));
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) CHECK(fast->elements() == *slow);
  }
}

TEST_CASE("scale_translate examples") {
  CHECK(spectra::scale_translate(set({"0", "1", "2"}), 1, 5) == set({"5", "6", "7"}));
  CHECK(spectra::scale_translate(set({"0", "1", "2"}), Rational(1, 2), 0) ==
        set({"0", "1/2", "1"}));
  CHECK(spectra::scale_translate(set({"0", "1"}), -1, 1) == set({"0", "1"}));
  CHECK_THROWS_AS(spectra::scale_translate(set({"0"}), 0, 1), spectra::InvalidInput);
}

TEST_CASE("duality and covariance of spectral pairs") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  auto rnd = [&] { return Rational(num(rng), den(rng)); };
  for (int n = 3; n <= 6; ++n) {
    for (int p = -12; p <= 12; ++p) {
      for (int q = 1; q <= 5; ++q) {
        if (spectra::gcd(p, q) != 1 || (p + q) % n != 0) continue;
        Rational a(p, q);
        if (a.is_integer() && a.sign() >= 0 && a.num() <= n - 2) continue;
        auto A = spectra::line_set(n, a);
        auto B = spectra::construct_line_spectrum(n, p, q);
        REQUIRE(spectra::is_spectral_pair(A, B));
        CHECK(spectra::is_spectral_pair(B, A));
        Rational t = rnd(), s = rnd();
        Rational c = rnd();
        if (c.is_zero()) c = Rational(3, 2);
        CHECK(spectra::is_spectral_pair(spectra::scale_translate(A, 1, t), B));
        CHECK(spectra::is_spectral_pair(A, spectra::scale_translate(B, 1, s)));
        CHECK(spectra::is_spectral_pair(spectra::scale_translate(A, c, 0),
                                        spectra::scale_translate(B, Rational(1) / c, 0)));
      }
    }
  }
  // Non-pairs stay non-pairs under the same transformations.
  auto A = set({"0", "1", "3"});
  auto B = set({"0", "1/3", "2/3"});
  CHECK_FALSE(spectra::is_spectral_pair(B, A));
  CHECK_FALSE(spectra::is_spectral_pair(spectra::scale_translate(A, 1, Rational(2, 7)), B));
  CHECK_FALSE(spectra::is_spectral_pair(spectra::scale_translate(A, Rational(5), 0),
                                        spectra::scale_translate(B, Rational(1, 5), 0)));
}
