#include "spectra/representation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit_phase(const Rational& x) { return std::polar(1.0, kTwoPi * frac(x).to_double()); }

}  // namespace

FiniteRep::FiniteRep(std::vector<Rational> eigenvalues, Eigen::MatrixXcd eigenvectors,
                     Eigen::VectorXcd v0)
    : eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)),
      v0_(std::move(v0)) {
  const auto n = Eigen::Index(eigenvalues_.size());
  if (n == 0) throw InvalidInput("empty_rep", "representation needs dimension >= 1");
  if (eigenvectors_.rows() != n || eigenvectors_.cols() != n || v0_.size() != n) {
    throw InvalidInput("dimension_mismatch", "eigenvector matrix and v0 must match dim");
  }
  const double defect =
      (eigenvectors_.adjoint() * eigenvectors_ - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > kTolerance) {
    throw InvalidInput("not_unitary", "eigenvector matrix is not unitary");
  }
  if (std::abs(v0_.norm() - 1.0) > kTolerance) {
    throw InvalidInput("not_unit_vector", "v0 must have norm 1");
  }
}

FiniteRep multiplication_representation(const AtomicMeasure& mu) {
  const auto n = Eigen::Index(mu.size());
  Eigen::VectorXcd v0(n);
  for (Eigen::Index i = 0; i < n; ++i) v0(i) = std::sqrt(mu.weights()[i]);
  // Weights sum to 1 only within AtomicMeasure::kWeightTolerance.
  v0 /= v0.norm();
  return FiniteRep(mu.points(), Eigen::MatrixXcd::Identity(n, n), std::move(v0));
}

Eigen::MatrixXcd evaluate_group_element(const FiniteRep& rep, const Rational& t) {
  const auto n = Eigen::Index(rep.dim());
  Eigen::VectorXcd phases(n);
  for (Eigen::Index j = 0; j < n; ++j) phases(j) = unit_phase(t * rep.eigenvalues()[j]);
  const auto& v = rep.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

Complex correlation(const FiniteRep& rep, const Rational& xi) {
  Eigen::VectorXcd c = rep.spectral_coefficients();
  Complex acc = 0.0;
  for (Eigen::Index j = 0; j < c.size(); ++j) acc += std::norm(c(j)) * unit_phase(xi * rep.eigenvalues()[j]);
  return acc;
}

AtomicMeasure measure_from_representation(const FiniteRep& rep) {
  Eigen::VectorXcd c = rep.spectral_coefficients();
  // A projection-valued measure sees eigenspaces: merge repeated eigenvalues.
  std::map<Rational, double> mass;
  for (Eigen::Index j = 0; j < c.size(); ++j) mass[rep.eigenvalues()[j]] += std::norm(c(j));
  std::vector<Rational> points;
  std::vector<double> weights;
  double total = 0.0;
  for (const auto& [g, w] : mass) {
    if (w < kNegligibleWeight) continue;
    points.push_back(g);
    weights.push_back(w);
    total += w;
  }
  for (double& w : weights) w /= total;
  return AtomicMeasure(std::move(points), std::move(weights));
}

WanderingReport is_wandering(const FiniteRep& rep, const FiniteRationalSet& s, double tol) {
  const auto n = Eigen::Index(rep.dim());
  const auto m = Eigen::Index(s.size());
  Eigen::MatrixXcd orbit(n, m);
  for (Eigen::Index i = 0; i < m; ++i) orbit.col(i) = evaluate_group_element(rep, s[i]) * rep.v0();
  Eigen::MatrixXcd gram = orbit.adjoint() * orbit;

  WanderingReport r;
  r.min_norm = std::sqrt(gram.diagonal().real().minCoeff());
  r.max_norm = std::sqrt(gram.diagonal().real().maxCoeff());
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      if (i != j) r.max_offdiagonal = std::max(r.max_offdiagonal, std::abs(gram(i, j)));
  r.is_orthonormal_family = r.max_offdiagonal <= tol && std::abs(r.min_norm - 1.0) <= tol &&
                            std::abs(r.max_norm - 1.0) <= tol;
  if (m == n) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
    r.spans_space = eig.eigenvalues().minCoeff() > tol;
  }
  return r;
}

std::int64_t PermutationRep::shift_at(const BigInt& j) const {
  return static_cast<std::int64_t>(mod_floor(j * generator_shift, BigInt(n)));
}

std::vector<std::int64_t> PermutationRep::permutation_at(const BigInt& j) const {
  const std::int64_t s = shift_at(j);
  std::vector<std::int64_t> sigma(n);
  for (std::int64_t i = 0; i < n; ++i) sigma[i] = (i + s) % n;
  return sigma;
}

PermutationRep permutation_representation(std::int64_t n, const BigInt& p, const BigInt& q) {
  if (n < 2) throw InvalidInput("bad_n", "permutation representation needs n >= 2");
  if (q.sign() <= 0) throw InvalidInput("bad_denominator", "q must be positive");
  if (gcd(p, q) != 1) throw InvalidInput("not_reduced", "p/q must be in lowest terms");
  if (mod_floor(p + q, BigInt(n)) != 0) {
    throw InvalidInput("congruence_fails", "p + q is not divisible by n");
  }
  GcdResult bez = extended_gcd(p, q);
  const auto shift = static_cast<std::int64_t>(mod_floor(bez.l - bez.k, BigInt(n)));

  // U(1/q) = P^shift with P delta_i = delta_{i+1}. The Fourier vectors
  // f_m = n^-1/2 sum_i w^{-mi} delta_i satisfy P f_m = w^m f_m (w = e^{2 pi i/n}),
  // so U(1/q) f_m = e^{2 pi i g_m / q} f_m with g_m = q ((shift m) mod n) / n in [0, q).
  std::vector<Rational> eigenvalues;
  Eigen::MatrixXcd v(n, n);
  const double norm = 1.0 / std::sqrt(double(n));
  for (std::int64_t m = 0; m < n; ++m) {
    const std::int64_t j = (shift * m) % n;
    eigenvalues.push_back(Rational(q * j, BigInt(n)));
    for (std::int64_t i = 0; i < n; ++i) {
      v(i, m) = norm * std::polar(1.0, -kTwoPi * double((m * i) % n) / double(n));
    }
  }
  Eigen::VectorXcd v0 = Eigen::VectorXcd::Zero(n);
  v0(0) = 1.0;
  return PermutationRep{n, p, q, bez.k, bez.l, shift,
                        FiniteRep(std::move(eigenvalues), std::move(v), std::move(v0))};
}

std::vector<std::int64_t> as_permutation(const Eigen::MatrixXcd& m, double tol) {
  const auto n = m.rows();
  std::vector<std::int64_t> sigma(n, -1);
  std::vector<bool> hit(n, false);
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index row = 0; row < n; ++row) {
      const Complex z = m(row, col);
      if (std::abs(z - 1.0) <= tol) {
        if (sigma[col] != -1 || hit[row]) return {};
        sigma[col] = row;
        hit[row] = true;
      } else if (std::abs(z) > tol) {
        return {};
      }
    }
    if (sigma[col] == -1) return {};
  }
  return sigma;
}

}  // namespace spectra
