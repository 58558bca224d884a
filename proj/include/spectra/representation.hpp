#ifndef SPECTRA_REPRESENTATION_HPP
#define SPECTRA_REPRESENTATION_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "spectra/finite_spectral.hpp"
#include "spectra/measures.hpp"
#include "spectra/rational.hpp"

namespace spectra {

// A unitary representation t -> U(t) of the reals on C^dim, stored through
// its spectral resolution: U(t) = V diag(exp(2 pi i t g_j)) V*, plus a
// distinguished unit vector v0. Eigenvalues may repeat.
class FiniteRep {
 public:
  static constexpr double kTolerance = 1e-12;

  // Throws InvalidInput when V is not unitary or v0 is not a unit vector
  // (both within kTolerance), or when dimensions disagree.
  FiniteRep(std::vector<Rational> eigenvalues, Eigen::MatrixXcd eigenvectors, Eigen::VectorXcd v0);

  std::size_t dim() const noexcept { return eigenvalues_.size(); }
  const std::vector<Rational>& eigenvalues() const noexcept { return eigenvalues_; }
  const Eigen::MatrixXcd& eigenvectors() const noexcept { return eigenvectors_; }
  const Eigen::VectorXcd& v0() const noexcept { return v0_; }

  // Coordinates of v0 in the eigenbasis, V* v0.
  Eigen::VectorXcd spectral_coefficients() const { return eigenvectors_.adjoint() * v0_; }

 private:
  std::vector<Rational> eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
  Eigen::VectorXcd v0_;
};

struct WanderingReport {
  bool is_orthonormal_family = false;
  double max_offdiagonal = 0.0;
  double min_norm = 0.0;
  double max_norm = 0.0;
  bool spans_space = false;
};

// Multiplication by e_t on L^2(mu), in the orthonormal basis delta_b/sqrt(w_b).
// The constant function 1 becomes (sqrt(w_1), ..., sqrt(w_n)).
FiniteRep multiplication_representation(const AtomicMeasure& mu);

Eigen::MatrixXcd evaluate_group_element(const FiniteRep& rep, const Rational& t);

// <v0, U(xi) v0>
Complex correlation(const FiniteRep& rep, const Rational& xi);

// Weights |P_g v0|^2 over the distinct eigenvalues g. Eigenvalues whose
// weight falls below kNegligibleWeight are dropped and the rest renormalized.
inline constexpr double kNegligibleWeight = 1e-14;
AtomicMeasure measure_from_representation(const FiniteRep& rep);

WanderingReport is_wandering(const FiniteRep& rep, const FiniteRationalSet& s, double tol);

// Representation of (1/q)Z on C^n in which U(1/q) cyclically shifts the
// standard basis by `generator_shift`, built from k p + l q = 1.
struct PermutationRep {
  std::int64_t n = 0;
  BigInt p;
  BigInt q;
  BigInt k;
  BigInt l;
  std::int64_t generator_shift = 0;  // (l - k) mod n
  FiniteRep rep;

  // U(j/q) delta_i = delta_{(i + shift_at(j)) mod n}; result in [0, n).
  std::int64_t shift_at(const BigInt& j) const;
  // sigma[i] = (i + shift_at(j)) mod n
  std::vector<std::int64_t> permutation_at(const BigInt& j) const;
};

// Throws InvalidInput unless gcd(p, q) = 1, q > 0, n >= 2 and n | p + q.
PermutationRep permutation_representation(std::int64_t n, const BigInt& p, const BigInt& q);

// The permutation matrix closest to m, provided every entry is within tol of
// 0 or 1 and the pattern is a permutation; otherwise empty.
std::vector<std::int64_t> as_permutation(const Eigen::MatrixXcd& m, double tol);

}  // namespace spectra

#endif  // SPECTRA_REPRESENTATION_HPP
