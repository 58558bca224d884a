#include "spectra/cyclotomic.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "spectra/errors.hpp"

namespace spectra {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::x_pow_minus_one(std::uint64_t n) {
  std::vector<BigInt> c(n + 1);
  c[0] = -1;
  c[n] += 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c.is_zero()) continue;
    BigInt mag = c.sign() < 0 ? BigInt(-c) : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

DivisionResult divide_monic(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero() || divisor.coeffs().back() != 1) {
    throw InvalidInput("non_monic_divisor", "divide_monic needs a monic divisor");
  }
  std::vector<BigInt> rem = dividend.coeffs();
  const auto& d = divisor.coeffs();
  const std::size_t dd = d.size() - 1;
  if (rem.size() <= dd) return {IntPolynomial(), dividend};

  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i].is_zero()) continue;
    BigInt lead = rem[i];
    quot[i - dd] = lead;
    for (std::size_t j = 0; j <= dd; ++j) {
      if (!d[j].is_zero()) rem[i - dd + j] -= lead * d[j];
    }
  }
  rem.resize(dd);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

namespace {

std::vector<std::uint64_t> divisors_below(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

struct CyclotomicCache {
  std::mutex mu;
  // unique_ptr keeps returned references stable across rehashing.
  std::unordered_map<std::uint64_t, std::unique_ptr<IntPolynomial>> table;
};

CyclotomicCache& cache() {
  static CyclotomicCache c;
  return c;
}

}  // namespace

const IntPolynomial& cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw InvalidInput("zero_order", "cyclotomic polynomial of order 0");
  auto& c = cache();
  {
    std::lock_guard lock(c.mu);
    if (auto it = c.table.find(n); it != c.table.end()) return *it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  IntPolynomial acc = IntPolynomial::x_pow_minus_one(n);
  for (std::uint64_t d : divisors_below(n)) {
    acc = divide_monic(acc, cyclotomic_polynomial(d)).quotient;
  }
  std::lock_guard lock(c.mu);
  auto [it, inserted] = c.table.emplace(n, std::make_unique<IntPolynomial>(std::move(acc)));
  return *it->second;
}

std::uint64_t euler_totient(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CycSum::CycSum(std::uint64_t order) : order_(order) {
  if (order == 0) throw InvalidInput("zero_order", "CycSum of order 0");
}

CycSum::CycSum(std::uint64_t order, const std::map<std::int64_t, BigInt>& terms) : CycSum(order) {
  for (const auto& [e, c] : terms) add(BigInt(e), c);
}

void CycSum::add(const BigInt& exponent, const BigInt& coeff) {
  if (coeff.is_zero()) return;
  auto e = static_cast<std::uint64_t>(mod_floor(exponent, BigInt(order_)));
  BigInt& slot = coeffs_[e];
  slot += coeff;
  if (slot.is_zero()) coeffs_.erase(e);
}

bool root_sum_is_zero(const CycSum& s) {
  if (s.coeffs().empty()) return true;
  std::vector<BigInt> dense(s.coeffs().rbegin()->first + 1);
  for (const auto& [e, c] : s.coeffs()) dense[e] = c;
  return divide_monic(IntPolynomial(std::move(dense)), cyclotomic_polynomial(s.order()))
      .remainder.is_zero();
}

std::complex<double> evaluate_cyc(const CycSum& s) {
  std::complex<double> acc = 0.0;
  const double n = static_cast<double>(s.order());
  for (const auto& [e, c] : s.coeffs()) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / n;
    acc += static_cast<double>(c) * std::polar(1.0, angle);
  }
  return acc;
}

}  // namespace spectra
