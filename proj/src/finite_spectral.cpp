#include "spectra/finite_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "spectra/cyclotomic.hpp"
#include "spectra/errors.hpp"

namespace spectra {

FiniteRationalSet::FiniteRationalSet(std::vector<Rational> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InvalidInput("empty_set", "a finite set needs at least one element");
  std::sort(elements_.begin(), elements_.end());
  auto dup = std::adjacent_find(elements_.begin(), elements_.end());
  if (dup != elements_.end()) {
    throw InvalidInput("repeated_element", "element " + dup->str() + " appears more than once");
  }
}

bool FiniteRationalSet::contains(const Rational& r) const {
  return std::binary_search(elements_.begin(), elements_.end(), r);
}

FiniteRationalSet integer_range(std::int64_t n) {
  std::vector<Rational> v;
  for (std::int64_t i = 0; i < n; ++i) v.emplace_back(i);
  return FiniteRationalSet(std::move(v));
}

const char* to_string(Verdict v) { return v == Verdict::spectral ? "spectral" : "not_spectral"; }

const char* to_string(NegativeReason r) {
  return r == NegativeReason::irrational ? "irrational" : "congruence_fails";
}

SumCheck exponential_sum_vanishes(std::span<const Rational> a, const Rational& d) {
  SumCheck out;
  std::vector<Rational> phases;
  phases.reserve(a.size());
  BigInt order = 1;
  for (const Rational& x : a) {
    phases.push_back(frac(x * d));
    order = lcm(order, phases.back().den());
  }
  out.order = order;

  if (order <= kExactOrderCap) {
    CycSum sum(static_cast<std::uint64_t>(order));
    for (const Rational& ph : phases) sum.add(ph.num() * (order / ph.den()), 1);
    out.vanishes = root_sum_is_zero(sum);
    return out;
  }

  out.exact = false;
  std::complex<double> acc = 0.0;
  for (const Rational& ph : phases) acc += std::polar(1.0, 2.0 * std::numbers::pi * ph.to_double());
  out.vanishes = std::abs(acc) < kFallbackTolerance;
  return out;
}

PairCertificate certify_spectral_pair(const FiniteRationalSet& a, const FiniteRationalSet& b) {
  if (a.size() != b.size()) {
    throw InvalidInput("size_mismatch", "spectral pair needs |A| == |B|, got " +
                                            std::to_string(a.size()) + " and " +
                                            std::to_string(b.size()));
  }
  PairCertificate cert;
  cert.spectral = true;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      SumCheck col = exponential_sum_vanishes(a.elements(), b[j] - b[i]);
      cert.exact = cert.exact && col.exact;
      cert.max_order = std::max(cert.max_order, col.order);
      if (!col.vanishes) {
        cert.spectral = false;
        return cert;
      }
    }
  }
  return cert;
}

bool is_spectral_pair(const FiniteRationalSet& a, const FiniteRationalSet& b) {
  return certify_spectral_pair(a, b).spectral;
}

FiniteRationalSet line_set(std::int64_t n, const Rational& a) {
  std::vector<Rational> v;
  for (std::int64_t i = 0; i + 1 < n; ++i) v.emplace_back(i);
  v.push_back(a);
  return FiniteRationalSet(std::move(v));
}

FiniteRationalSet construct_line_spectrum(std::int64_t n, const BigInt& p, const BigInt& q) {
  if (n < 1) throw InvalidInput("bad_n", "n must be positive");
  if (q.sign() <= 0) throw InvalidInput("bad_denominator", "q must be positive");
  if (gcd(p, q) != 1) throw InvalidInput("not_reduced", "p/q must be in lowest terms");
  if (mod_floor(p + q, BigInt(n)) != 0) {
    throw InvalidInput("congruence_fails", "p + q is not divisible by n");
  }
  if (gcd(q, BigInt(n)) != 1) {
    // Implied by gcd(p, q) == 1 and n | p + q.
    throw std::logic_error("construct_line_spectrum: gcd(q, n) != 1");
  }
  std::vector<Rational> b;
  for (std::int64_t j = 0; j < n; ++j) b.emplace_back(BigInt(j) * q, BigInt(n));
  return FiniteRationalSet(std::move(b));
}

SpectralDecision decide_line_set(std::int64_t n, const ElementInput& a) {
  if (n < 3) throw InvalidInput("bad_n", "line-set criterion needs n >= 3");
  if (const auto* tag = std::get_if<IrrationalTag>(&a)) {
    (void)tag;
    return {Verdict::not_spectral, std::nullopt, NegativeReason::irrational};
  }
  const Rational& r = std::get<Rational>(a);
  if (r.is_integer() && r.sign() >= 0 && r.num() <= n - 2) {
    throw InvalidInput("repeated_element",
                       "a = " + r.str() + " already belongs to {0, ..., n-2}");
  }
  if (mod_floor(r.num() + r.den(), BigInt(n)) != 0) {
    return {Verdict::not_spectral, std::nullopt, NegativeReason::congruence_fails};
  }
  FiniteRationalSet spectrum = construct_line_spectrum(n, r.num(), r.den());
  if (!is_spectral_pair(line_set(n, r), spectrum)) {
    throw std::logic_error("decide_line_set: constructed spectrum failed certification");
  }
  return {Verdict::spectral, std::move(spectrum), std::nullopt};
}

SpectralDecision decide_three_point(const ElementInput& a) { return decide_line_set(3, a); }

namespace {

// Candidates in [0, span) with denominator <= q_max, ascending.
std::vector<Rational> search_grid(std::int64_t q_max, const Rational& span) {
  std::vector<Rational> grid;
  for (std::int64_t v = 1; v <= q_max; ++v) {
    // u/v < span  <=>  u < span * v
    Rational limit = span * Rational(v);
    BigInt u_end = limit.num() / limit.den();
    if (u_end * limit.den() != limit.num()) u_end += 1;
    for (BigInt u = 0; u < u_end; ++u) {
      if (gcd(u, BigInt(v)) == 1 || (u.is_zero() && v == 1)) grid.emplace_back(u, BigInt(v));
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

class SpectrumSearch {
 public:
  SpectrumSearch(const FiniteRationalSet& a, std::vector<Rational> grid)
      : a_(a), grid_(std::move(grid)) {}

  std::optional<FiniteRationalSet> run() {
    chosen_ = {Rational(0)};
    // Every nonzero member must be orthogonal to the member 0.
    for (const Rational& g : grid_) {
      if (!g.is_zero() && orthogonal(g)) pool_.push_back(g);
    }
    if (extend(0)) return FiniteRationalSet(chosen_);
    return std::nullopt;
  }

 private:
  bool orthogonal(const Rational& diff) {
    Rational key = diff.sign() < 0 ? -diff : diff;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool v = exponential_sum_vanishes(a_.elements(), key).vanishes;
    memo_.emplace(std::move(key), v);
    return v;
  }

  // Depth-first in ascending order: the first complete set is the
  // lexicographically smallest.
  bool extend(std::size_t from) {
    if (chosen_.size() == a_.size()) return is_spectral_pair(a_, FiniteRationalSet(chosen_));
    for (std::size_t i = from; i < pool_.size(); ++i) {
      const Rational& cand = pool_[i];
      bool ok = true;
      for (std::size_t j = 1; j < chosen_.size() && ok; ++j) ok = orthogonal(cand - chosen_[j]);
      if (!ok) continue;
      chosen_.push_back(cand);
      if (extend(i + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const FiniteRationalSet& a_;
  std::vector<Rational> grid_;
  std::vector<Rational> pool_;
  std::vector<Rational> chosen_;
  std::unordered_map<Rational, bool> memo_;
};

}  // namespace

std::optional<FiniteRationalSet> search_spectrum(const FiniteRationalSet& a, std::int64_t q_max,
                                                 const Rational& span) {
  if (q_max < 1) throw InvalidInput("bad_qmax", "q_max must be >= 1");
  if (span.sign() <= 0) throw InvalidInput("bad_span", "span must be positive");
  SpectrumSearch search(a, search_grid(q_max, span));
  return search.run();
}

FiniteRationalSet scale_translate(const FiniteRationalSet& a, const Rational& c, const Rational& t) {
  if (c.is_zero()) throw InvalidInput("zero_scale", "scaling factor must be nonzero");
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const Rational& x : a) out.push_back(c * x + t);
  return FiniteRationalSet(std::move(out));
}

}  // namespace spectra
