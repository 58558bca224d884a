#ifndef SPECTRA_LINEAR_FORM_HPP
#define SPECTRA_LINEAR_FORM_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "spectra/rational.hpp"

namespace spectra {

// c + sum_i r_i * x_i with rational c, r_i and named symbols x_i. Symbols
// stand for reals that are irrational and rationally independent of each
// other, so two forms denote the same number only if they are identical.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(Rational constant) : constant_(std::move(constant)) {}  // NOLINT(implicit)
  LinearForm(std::int64_t constant) : constant_(constant) {}         // NOLINT(implicit)

  static LinearForm symbol(const std::string& name);

  const Rational& constant() const noexcept { return constant_; }
  const std::map<std::string, Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_rational() const noexcept { return coeffs_.empty(); }
  bool is_zero() const noexcept { return coeffs_.empty() && constant_.is_zero(); }

  // Value after substituting every symbol. Throws InvalidInput when a symbol
  // is missing from `values`.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  // r with *this == r * other, if any.
  std::optional<Rational> ratio_to(const LinearForm& other) const;

  // "a-1", "-a+1/2", "3/2", "2*a+b".
  std::string str() const;

  LinearForm operator-() const;
  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const Rational& r);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Rational& r) { return a *= r; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b);

 private:
  Rational constant_;
  std::map<std::string, Rational> coeffs_;  // no zero entries
};

// Parses sums of terms such as "a-1", "1-a", "-a", "2/3", "3*a+1/2", "2a".
LinearForm parse_linear_form(std::string_view text);

}  // namespace spectra

#endif  // SPECTRA_LINEAR_FORM_HPP
