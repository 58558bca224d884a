#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "spectra/errors.hpp"
#include "spectra/representation.hpp"

using spectra::AtomicMeasure;
using spectra::BigInt;
using spectra::FiniteRationalSet;
using spectra::FiniteRep;
using spectra::Rational;

namespace {

FiniteRationalSet set(std::initializer_list<Rational> xs) {
  return FiniteRationalSet(std::vector<Rational>(xs));
}

AtomicMeasure random_measure(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, 8), num(-30, 30), den(1, 12);
  std::uniform_real_distribution<double> wdist(0.05, 1.0);
  std::vector<Rational> pts;
  while (pts.size() < std::size_t(size(rng)) || pts.empty()) {
    Rational r(num(rng), den(rng));
    if (std::find(pts.begin(), pts.end(), r) == pts.end()) pts.push_back(r);
    if (pts.size() >= 8) break;
  }
  std::vector<double> w;
  double total = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) total += w.emplace_back(wdist(rng));
  for (double& x : w) x /= total;
  return AtomicMeasure(std::move(pts), std::move(w));
}

// A random unitary from the QR factorization of a random complex matrix.
Eigen::MatrixXcd random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

}  // namespace

TEST_CASE("FiniteRep validation") {
  Eigen::VectorXcd v0(2);
  v0 << 1.0, 0.0;
  CHECK_THROWS_AS(FiniteRep({0, 1}, Eigen::MatrixXcd::Ones(2, 2), v0), spectra::InvalidInput);
  CHECK_THROWS_AS(FiniteRep({0, 1}, Eigen::MatrixXcd::Identity(2, 2), 2.0 * v0), spectra::InvalidInput);
  CHECK_THROWS_AS(FiniteRep({0}, Eigen::MatrixXcd::Identity(2, 2), v0), spectra::InvalidInput);
}

TEST_CASE("multiplication_representation examples") {
  auto rep = spectra::multiplication_representation(AtomicMeasure::uniform(set({0, Rational(1, 2)})));
  CHECK(rep.dim() == 2);
  CHECK(rep.eigenvalues() == std::vector<Rational>{0, Rational(1, 2)});
  CHECK(std::abs(rep.v0()(0) - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(rep.v0()(1) - 1 / std::sqrt(2.0)) < 1e-15);

  auto rep3 = spectra::multiplication_representation(
      AtomicMeasure::uniform(set({0, Rational(1, 3), Rational(2, 3)})));
  CHECK(rep3.dim() == 3);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(rep3.v0()(i) - 1 / std::sqrt(3.0)) < 1e-15);

  auto point = spectra::multiplication_representation(AtomicMeasure({0}, {1.0}));
  CHECK(point.dim() == 1);
  CHECK(point.v0()(0) == spectra::Complex(1.0));
}

TEST_CASE("evaluate_group_element examples") {
  auto rep = spectra::multiplication_representation(AtomicMeasure::uniform(set({0, Rational(1, 2)})));
  CHECK((spectra::evaluate_group_element(rep, 0) - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-15);
  Eigen::MatrixXcd expected(2, 2);
  expected << 1.0, 0.0, 0.0, -1.0;
  CHECK((spectra::evaluate_group_element(rep, 1) - expected).norm() < 1e-15);

  auto rep3 = spectra::multiplication_representation(
      AtomicMeasure::uniform(set({0, Rational(1, 3), Rational(2, 3)})));
  Eigen::MatrixXcd lhs = spectra::evaluate_group_element(rep3, Rational(1, 3)) *
             spectra::evaluate_group_element(rep3, Rational(2, 3));
  CHECK((lhs - spectra::evaluate_group_element(rep3, 1)).norm() < 1e-14);
}

TEST_CASE("group law on random representations") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 15);
  for (int trial = 0; trial < 10; ++trial) {
    auto mu = random_measure(rng);
    auto v = random_unitary(rng, Eigen::Index(mu.size()));
    FiniteRep rep(mu.points(), v, v.col(0));
    for (int i = 0; i < 100; ++i) {
      Rational s(num(rng), den(rng)), t(num(rng), den(rng));
      auto us = spectra::evaluate_group_element(rep, s);
      auto ut = spectra::evaluate_group_element(rep, t);
      CHECK((us * ut - spectra::evaluate_group_element(rep, s + t)).norm() <= 1e-10);
    }
  }
}

TEST_CASE("correlation examples") {
  auto half = spectra::multiplication_representation(AtomicMeasure::uniform(set({0, Rational(1, 2)})));
  CHECK(std::abs(spectra::correlation(half, 0) - 1.0) < 1e-15);
  CHECK(std::abs(spectra::correlation(half, 1)) < 1e-15);
  auto third = spectra::multiplication_representation(
      AtomicMeasure::uniform(set({0, Rational(1, 3), Rational(2, 3)})));
  CHECK(std::abs(spectra::correlation(third, 1)) < 1e-15);
}

TEST_CASE("measure_from_representation examples") {
  auto mu = AtomicMeasure({0, Rational(1, 2), Rational(5, 3)}, {0.5, 0.3, 0.2});
  auto back = spectra::measure_from_representation(spectra::multiplication_representation(mu));
  CHECK(back.points() == mu.points());
  for (std::size_t i = 0; i < mu.size(); ++i) CHECK(std::abs(back.weights()[i] - mu.weights()[i]) < 1e-12);

  Eigen::VectorXcd e0(2);
  e0 << 1.0, 0.0;
  auto point = spectra::measure_from_representation(
      FiniteRep({0, Rational(1, 2)}, Eigen::MatrixXcd::Identity(2, 2), e0));
  CHECK(point.points() == std::vector<Rational>{0});
  CHECK(point.weights() == std::vector<double>{1.0});

  Eigen::VectorXcd v(3);
  v << 1 / std::sqrt(2.0), 0.5, 0.5;
  auto merged = spectra::measure_from_representation(
      FiniteRep({0, 0, Rational(1, 2)}, Eigen::MatrixXcd::Identity(3, 3), v));
  REQUIRE(merged.size() == 2);
  CHECK(merged.points()[0] == Rational(0));
  CHECK(merged.weights()[0] == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(merged.weights()[1] == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("correlation equals the transform of the extracted measure") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> num(-200, 200), den(1, 30);
  for (int trial = 0; trial < 50; ++trial) {
    auto mu = random_measure(rng);
    auto v = random_unitary(rng, Eigen::Index(mu.size()));
    Eigen::VectorXcd v0 = v * Eigen::VectorXcd::Random(Eigen::Index(mu.size()));
    v0.normalize();
    FiniteRep rep(mu.points(), v, v0);
    auto extracted = spectra::measure_from_representation(rep);
    for (int i = 0; i < 20; ++i) {
      Rational xi(num(rng), den(rng));
      CHECK(std::abs(spectra::correlation(rep, xi) - spectra::atomic_transform(extracted, xi)) < 1e-12);
    }
  }
}

TEST_CASE("is_wandering examples") {
  auto half = spectra::multiplication_representation(AtomicMeasure::uniform(set({0, Rational(1, 2)})));
  auto r = spectra::is_wandering(half, set({0, 1}), 1e-12);
  CHECK(r.is_orthonormal_family);
  CHECK(r.spans_space);
  CHECK(r.max_offdiagonal < 1e-15);

  r = spectra::is_wandering(half, set({0, 2}), 1e-12);
  CHECK_FALSE(r.is_orthonormal_family);
  CHECK_FALSE(r.spans_space);
  CHECK(r.max_offdiagonal == doctest::Approx(1.0));

  r = spectra::is_wandering(half, set({0}), 1e-12);
  CHECK(r.is_orthonormal_family);
  CHECK_FALSE(r.spans_space);
  auto point = spectra::multiplication_representation(AtomicMeasure({Rational(3)}, {1.0}));
  CHECK(spectra::is_wandering(point, set({0}), 1e-12).spans_space);
}

TEST_CASE("wandering basis implies a spectral pair with the extracted support") {
  // Conjugating a multiplication representation by a random unitary keeps
  // the orbit an orthonormal basis; the extracted support must pair with S.
  std::mt19937_64 rng(31337);
  for (int n = 3; n <= 6; ++n) {
    for (int p = -9; p <= 9; ++p) {
      for (int q = 1; q <= 5; ++q) {
        if (spectra::gcd(p, q) != 1 || (p + q) % n != 0) continue;
        Rational a(p, q);
        if (a.is_integer() && a.sign() >= 0 && a.num() <= n - 2) continue;
        auto s = spectra::line_set(n, a);
        auto b = spectra::construct_line_spectrum(n, p, q);
        auto base = spectra::multiplication_representation(AtomicMeasure::uniform(b));
        auto w = random_unitary(rng, n);
        FiniteRep rep(base.eigenvalues(), w * base.eigenvectors(), w * base.v0());
        auto report = spectra::is_wandering(rep, s, 1e-10);
        REQUIRE(report.is_orthonormal_family);
        REQUIRE(report.spans_space);
        auto support = spectra::measure_from_representation(rep).support();
        CHECK(spectra::is_spectral_pair(s, support));
      }
    }
  }
}

TEST_CASE("permutation_representation examples") {
  auto r = spectra::permutation_representation(3, 2, 1);
  CHECK(r.k == 0);
  CHECK(r.l == 1);
  CHECK(r.generator_shift == 1);
  CHECK(r.shift_at(1) == 1);
  CHECK(r.shift_at(2) == 2);  // -1 mod 3

  r = spectra::permutation_representation(3, 1, 2);
  CHECK(r.k == 1);
  CHECK(r.l == 0);
  CHECK(r.generator_shift == 2);
  CHECK(r.shift_at(2) == 1);  // U(1) = U(1/2)^2
  CHECK(r.shift_at(1) == 2);  // U(1/2) shifts by -1

  r = spectra::permutation_representation(4, 3, 1);
  CHECK(r.generator_shift == 1);
  CHECK(r.shift_at(3) == 3);
  CHECK(r.permutation_at(3) == std::vector<std::int64_t>{3, 0, 1, 2});

  CHECK_THROWS_AS(spectra::permutation_representation(3, 1, 1), spectra::InvalidInput);
  CHECK_THROWS_AS(spectra::permutation_representation(3, 2, 4), spectra::InvalidInput);
}

TEST_CASE("permutation_representation identities over a grid") {
  for (int n = 3; n <= 6; ++n) {
    for (int q = 1; q <= 10; ++q) {
      for (int p = -30; p <= 30; ++p) {
        if (spectra::gcd(p, q) != 1 || (p + q) % n != 0) continue;
        auto r = spectra::permutation_representation(n, p, q);
        CHECK(r.k * p + r.l * q == 1);
        CHECK(r.shift_at(BigInt(n) * q) == 0);
        CHECK(r.shift_at(q) == 1);
        CHECK(r.shift_at(p) == n - 1);
        // The spectral resolution reproduces the same permutations.
        auto u1 = spectra::evaluate_group_element(r.rep, 1);
        auto ua = spectra::evaluate_group_element(r.rep, Rational(p, q));
        auto gen = spectra::evaluate_group_element(r.rep, Rational(1, q));
        CHECK(spectra::as_permutation(u1, 1e-10) == r.permutation_at(q));
        CHECK(spectra::as_permutation(ua, 1e-10) == r.permutation_at(p));
        CHECK(spectra::as_permutation(gen, 1e-10) == r.permutation_at(1));
        // The extracted measure has the line set as a spectrum.
        auto mu = spectra::measure_from_representation(r.rep);
        CHECK(mu.support() == spectra::construct_line_spectrum(n, p, q));
        CHECK(spectra::is_spectral_pair(spectra::line_set(n, Rational(p, q)), mu.support()));
        auto wander = spectra::is_wandering(r.rep, spectra::line_set(n, Rational(p, q)), 1e-10);
        CHECK(wander.is_orthonormal_family);
        CHECK(wander.spans_space);
      }
    }
  }
}
