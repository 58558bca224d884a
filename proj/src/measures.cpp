#include "spectra/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxDepth = 4096;

Complex unit_phase(const Rational& x) { return std::polar(1.0, kTwoPi * frac(x).to_double()); }

Rational abs_rational(const Rational& r) { return r.sign() < 0 ? -r : r; }

using Wide = __int128;
constexpr unsigned kWideBits = 120;

// Factors below this modulus are handed to the exact vanishing test; a
// nonzero float above it cannot come from a vanishing sum.
constexpr double kVanishScreen = 1e-6;

Wide to_wide(const BigInt& x) {
  const BigInt mag = x < 0 ? BigInt(-x) : x;
  const BigInt mask = (BigInt(1) << 64) - 1;
  Wide w = (Wide((mag >> 64).convert_to<std::uint64_t>()) << 64) | Wide((mag & mask).convert_to<std::uint64_t>());
  return x < 0 ? -w : w;
}

bool fits(const BigInt& x, unsigned bits) { return x == 0 || boost::multiprecision::msb(x < 0 ? BigInt(-x) : x) < bits; }

// Successive factors m_D(t / R^k), k = 1, 2, ... With D = A / b and t = P / Q
// the phase of d t / R^k is (A_d P mod b Q R^k) / (b Q R^k), computed in
// 128-bit integers. Once every |A_d P| is below the denominator the values
// are plain small doubles; operands too wide for 128 bits fall back to
// rational arithmetic.
class FactorStream {
 public:
  FactorStream(const IFSMeasure& mu, const Rational& t) : mu_(mu), s_(t) {
    BigInt b = 1;
    for (const auto& d : mu.digits) b = lcm(b, d.den());
    const BigInt den = b * t.den();
    std::vector<BigInt> nums;
    for (const auto& d : mu.digits) nums.push_back(d.num() * (b / d.den()) * t.num());
    wide_ = fits(den, 60) && std::all_of(nums.begin(), nums.end(), [](const BigInt& x) { return fits(x, kWideBits); });
    if (wide_) {
      den_ = to_wide(den);
      for (const auto& x : nums) num_.push_back(to_wide(x));
    }
  }

  Complex next() {
    const double n = double(mu_.digits.size());
    Complex m = 0.0;
    if (small_) {
      for (double& x : small_values_) m += std::polar(1.0, kTwoPi * (x /= double(mu_.scale)));
      return m / n;
    }
    if (wide_) {
      den_ *= mu_.scale;
      bool all_small = true;
      for (Wide a : num_) {
        Wide r = a % den_;
        if (r < 0) r += den_;
        m += std::polar(1.0, kTwoPi * (double(r) / double(den_)));
        all_small = all_small && (a < 0 ? -a : a) < den_;
      }
      if (all_small) {
        small_ = true;
        for (Wide a : num_) small_values_.push_back(double(a) / double(den_));
      }
      return m / n;
    }
    s_ /= Rational(mu_.scale);
    for (const auto& d : mu_.digits) m += unit_phase(d * s_);
    return m / n;
  }

 private:
  const IFSMeasure& mu_;
  Rational s_;
  bool wide_ = false;
  bool small_ = false;
  Wide den_ = 1;
  std::vector<Wide> num_;
  std::vector<double> small_values_;
};

}  // namespace

AtomicMeasure::AtomicMeasure(std::vector<Rational> points, std::vector<double> weights) {
  if (points.size() != weights.size()) {
    throw InvalidInput("size_mismatch", "measure needs one weight per point");
  }
  if (points.empty()) throw InvalidInput("empty_set", "measure needs at least one point");
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return points[i] < points[j]; });
  double total = 0.0;
  for (std::size_t i : order) {
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
      throw InvalidInput("nonpositive_weight", "measure weights must be positive");
    }
    if (!points_.empty() && points_.back() == points[i]) {
      throw InvalidInput("repeated_element", "point " + points[i].str() + " appears twice");
    }
    points_.push_back(points[i]);
    weights_.push_back(weights[i]);
    total += weights[i];
  }
  if (std::abs(total - 1.0) > kWeightTolerance * std::max<double>(1.0, double(weights_.size()))) {
    throw InvalidInput("not_normalized", "measure weights must sum to 1");
  }
}

AtomicMeasure AtomicMeasure::uniform(const FiniteRationalSet& support) {
  std::vector<double> w(support.size(), 1.0 / double(support.size()));
  return AtomicMeasure(support.elements(), std::move(w));
}

IFSMeasure::IFSMeasure(std::int64_t r, std::vector<Rational> d) : scale(r), digits(std::move(d)) {
  if (scale < 2) throw InvalidInput("bad_scale", "IFS scale must be >= 2");
  std::vector<Rational> sorted = digits;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < 2 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("bad_digits", "IFS needs at least two distinct digits");
  }
}

IFSMeasure IFSMeasure::cantor4() { return IFSMeasure(4, {Rational(0), Rational(2)}); }

Rational IFSMeasure::max_abs_digit() const {
  Rational m(0);
  for (const auto& d : digits) m = std::max(m, abs_rational(d));
  return m;
}

Complex atomic_transform(const AtomicMeasure& mu, const Rational& t) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) acc += mu.weights()[i] * unit_phase(mu.points()[i] * t);
  return acc;
}

Complex atomic_transform(const AtomicMeasure& mu, double t) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    acc += mu.weights()[i] * std::polar(1.0, kTwoPi * mu.points()[i].to_double() * t);
  }
  return acc;
}

int ifs_truncation_depth(const IFSMeasure& mu, double abs_t, double eps) {
  if (!(eps > 0.0)) throw InvalidInput("bad_eps", "eps must be positive");
  // |m(s) - 1| <= 2 pi M |s|, so the tail beyond K deviates from 1 by at most
  // exp(delta) - 1 with delta = 2 pi M |t| R^-K / (R - 1).
  const double r = double(mu.scale);
  const double budget = std::log1p(eps);
  double delta = kTwoPi * mu.max_abs_digit().to_double() * abs_t / (r - 1.0);
  int k = 0;
  while (delta > budget && k < kMaxDepth) {
    delta /= r;
    ++k;
  }
  return k;
}

TransformValue ifs_transform(const IFSMeasure& mu, double t, double eps) {
  TransformValue out;
  out.depth = ifs_truncation_depth(mu, std::abs(t), eps);
  const double n = double(mu.digits.size());
  std::vector<double> digits;
  for (const auto& d : mu.digits) digits.push_back(d.to_double());
  Complex prod = 1.0;
  double s = t;
  for (int k = 1; k <= out.depth; ++k) {
    s /= double(mu.scale);
    Complex m = 0.0;
    for (double d : digits) m += std::polar(1.0, kTwoPi * d * s);
    prod *= m / n;
  }
  out.value = prod;
  return out;
}

TransformValue ifs_transform(const IFSMeasure& mu, const Rational& t, double eps, ZeroDetection mode) {
  if (mode == ZeroDetection::floating) return ifs_transform(mu, t.to_double(), eps);

  TransformValue out;
  out.depth = ifs_truncation_depth(mu, std::abs(t.to_double()), eps);
  // A factor can only vanish while max|d s| >= 1/4; below that every phase
  // has positive real part. The float bound is loosened slightly so that it
  // never skips a factor the exact bound would test.
  const double bound = (mu.max_abs_digit() * abs_rational(t)).to_double() * (1.0 + 1e-9);
  FactorStream factors(mu, t);
  Complex prod = 1.0;
  double reach = bound;
  for (int k = 1;; ++k) {
    reach /= double(mu.scale);
    const bool may_vanish = reach >= 0.25;
    if (!may_vanish && k > out.depth) break;
    const Complex m = factors.next();
    if (may_vanish && std::abs(m) <= kVanishScreen) {
      Rational s = t / Rational(BigInt(boost::multiprecision::pow(BigInt(mu.scale), unsigned(k))));
      SumCheck check = exponential_sum_vanishes(mu.digits, s);
      if (check.exact && check.vanishes) {
        out.value = 0.0;
        out.depth = k;
        out.exact_zero = true;
        return out;
      }
    }
    if (k <= out.depth) prod *= m;
  }
  out.value = prod;
  return out;
}

std::vector<std::int64_t> jp_spectrum(int level) {
  if (level < 0 || level > kMaxJpLevel) {
    throw InvalidInput("bad_level", "level must lie in [0, " + std::to_string(kMaxJpLevel) + "]");
  }
  std::vector<std::int64_t> out{0};
  std::int64_t power = 1;
  for (int k = 0; k <= level; ++k, power *= 4) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] + power);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> to_rationals(std::span<const std::int64_t> xs) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (auto x : xs) out.emplace_back(x);
  return out;
}

Eigen::MatrixXcd gram_matrix(const AtomicMeasure& mu, std::span<const Rational> lambda) {
  const auto n = Eigen::Index(lambda.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      g(i, j) = atomic_transform(mu, lambda[j] - lambda[i]);
      g(j, i) = std::conj(g(i, j));
    }
  }
  return g;
}

Eigen::MatrixXcd gram_matrix(const IFSMeasure& mu, std::span<const Rational> lambda, double eps,
                             ZeroDetection mode) {
  const auto n = Eigen::Index(lambda.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      g(i, j) = ifs_transform(mu, lambda[j] - lambda[i], eps, mode).value;
      g(j, i) = std::conj(g(i, j));
    }
  }
  return g;
}

FrameReport frame_bounds(const AtomicMeasure& mu, std::span<const Rational> lambda) {
  // In the orthonormal basis delta_b / sqrt(w_b) of L^2(mu), e_lambda has
  // coordinates sqrt(w_b) exp(2 pi i lambda b).
  const auto dim = Eigen::Index(mu.size());
  Eigen::MatrixXcd frame = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::VectorXcd u(dim);
  for (const Rational& l : lambda) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      u(b) = std::sqrt(mu.weights()[b]) * unit_phase(l * mu.points()[b]);
    }
    frame.noalias() += u * u.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(frame, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  FrameReport r;
  r.lower = std::max(0.0, ev.minCoeff());
  r.upper = std::max(0.0, ev.maxCoeff());
  return r;
}

double completeness_defect(const AtomicMeasure& mu, std::span<const Rational> lambda,
                           const Rational& t) {
  double q = 0.0;
  for (const Rational& l : lambda) q += std::norm(atomic_transform(mu, t - l));
  return q;
}

double completeness_defect(const IFSMeasure& mu, std::span<const Rational> lambda,
                           const Rational& t, double eps) {
  if (lambda.empty()) return 0.0;
  const double term_eps = eps / double(lambda.size());
  double q = 0.0;
  for (const Rational& l : lambda) q += std::norm(ifs_transform(mu, t - l, term_eps).value);
  return q;
}

double completeness_defect(const IFSMeasure& mu, std::span<const Rational> lambda, double t,
                           double eps) {
  if (lambda.empty()) return 0.0;
  const double term_eps = eps / double(lambda.size());
  double q = 0.0;
  for (const Rational& l : lambda) {
    q += std::norm(ifs_transform(mu, t - l.to_double(), term_eps).value);
  }
  return q;
}

}  // namespace spectra
