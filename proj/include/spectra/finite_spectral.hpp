#ifndef SPECTRA_FINITE_SPECTRAL_HPP
#define SPECTRA_FINITE_SPECTRAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "spectra/rational.hpp"

namespace spectra {

// Nonempty, strictly increasing set of rationals.
class FiniteRationalSet {
 public:
  // Sorts the input. Throws InvalidInput on an empty input or a repeated value.
  explicit FiniteRationalSet(std::vector<Rational> elements);

  const std::vector<Rational>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Rational& operator[](std::size_t i) const { return elements_[i]; }
  bool contains(const Rational& r) const;

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  friend bool operator==(const FiniteRationalSet&, const FiniteRationalSet&) = default;

 private:
  std::vector<Rational> elements_;
};

// {0, 1, ..., n-1}
FiniteRationalSet integer_range(std::int64_t n);

// An irrational real, known only by its label.
struct IrrationalTag {
  std::string label;
  friend bool operator==(const IrrationalTag&, const IrrationalTag&) = default;
};

using ElementInput = std::variant<Rational, IrrationalTag>;

enum class Verdict { spectral, not_spectral };
enum class NegativeReason { irrational, congruence_fails };

const char* to_string(Verdict v);
const char* to_string(NegativeReason r);

struct SpectralDecision {
  Verdict verdict;
  std::optional<FiniteRationalSet> certificate;
  std::optional<NegativeReason> reason;
};

// Outcome of the vanishing test for one exponential sum.
struct SumCheck {
  bool vanishes = false;
  // false when the common denominator exceeded kExactOrderCap and the
  // floating fallback decided.
  bool exact = true;
  BigInt order = 1;
};

inline constexpr std::uint64_t kExactOrderCap = 1'000'000;
inline constexpr double kFallbackTolerance = 1e-9;

// Decides sum_{a in A} exp(2 pi i a d) == 0.
SumCheck exponential_sum_vanishes(std::span<const Rational> a, const Rational& d);

struct PairCertificate {
  bool spectral = false;
  bool exact = true;
  BigInt max_order = 1;
};

// Unitarity of (exp(2 pi i a b)) via pairwise column orthogonality.
// Throws InvalidInput when |A| != |B|.
PairCertificate certify_spectral_pair(const FiniteRationalSet& a, const FiniteRationalSet& b);
bool is_spectral_pair(const FiniteRationalSet& a, const FiniteRationalSet& b);

// {0, 1, ..., n-2, a}: spectral iff a = p/q (reduced, q > 0) with n | p + q.
SpectralDecision decide_line_set(std::int64_t n, const ElementInput& a);
SpectralDecision decide_three_point(const ElementInput& a);

// {0, q/n, 2q/n, ..., (n-1)q/n}
FiniteRationalSet construct_line_spectrum(std::int64_t n, const BigInt& p, const BigInt& q);

// {0, 1, ..., n-2, a}
FiniteRationalSet line_set(std::int64_t n, const Rational& a);

// Lexicographically smallest B containing 0 with |B| = |A|, elements of
// denominator <= q_max in [0, span), such that (A, B) is a spectral pair.
// An empty result means "not found within bounds", not "non-spectral".
std::optional<FiniteRationalSet> search_spectrum(const FiniteRationalSet& a, std::int64_t q_max,
                                                 const Rational& span);

// c*A + t. Throws InvalidInput when c == 0.
FiniteRationalSet scale_translate(const FiniteRationalSet& a, const Rational& c, const Rational& t);

}  // namespace spectra

#endif  // SPECTRA_FINITE_SPECTRAL_HPP
