#ifndef SPECTRA_CYCLOTOMIC_HPP
#define SPECTRA_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spectra/rational.hpp"

namespace spectra {

// Dense integer polynomial, coeffs[i] multiplies x^i. The zero polynomial has
// no coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  // x^n - 1
  static IntPolynomial x_pow_minus_one(std::uint64_t n);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  std::string str() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct DivisionResult {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

// Division by a monic divisor stays inside Z[x].
DivisionResult divide_monic(const IntPolynomial& dividend, const IntPolynomial& divisor);

// The N-th cyclotomic polynomial. Memoized; safe to call from several threads.
// Throws InvalidInput for N == 0.
const IntPolynomial& cyclotomic_polynomial(std::uint64_t n);

std::uint64_t euler_totient(std::uint64_t n);

// Formal sum  sum_e c_e * zeta_N^e  with zeta_N = exp(2 pi i / N).
class CycSum {
 public:
  explicit CycSum(std::uint64_t order);
  CycSum(std::uint64_t order, const std::map<std::int64_t, BigInt>& terms);

  // Adds c * zeta_N^e; e is reduced mod N here.
  void add(const BigInt& exponent, const BigInt& coeff);

  std::uint64_t order() const noexcept { return order_; }
  const std::map<std::uint64_t, BigInt>& coeffs() const noexcept { return coeffs_; }

 private:
  std::uint64_t order_;
  std::map<std::uint64_t, BigInt> coeffs_;
};

// Exact zero test: sum c_e x^e divisible by Phi_N.
bool root_sum_is_zero(const CycSum& s);

std::complex<double> evaluate_cyc(const CycSum& s);

}  // namespace spectra

#endif  // SPECTRA_CYCLOTOMIC_HPP
