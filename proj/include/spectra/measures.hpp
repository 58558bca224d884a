#ifndef SPECTRA_MEASURES_HPP
#define SPECTRA_MEASURES_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spectra/finite_spectral.hpp"
#include "spectra/rational.hpp"

namespace spectra {

using Complex = std::complex<double>;

// Finitely supported probability measure: sorted distinct points, positive
// weights summing to 1 (within kWeightTolerance).
class AtomicMeasure {
 public:
  static constexpr double kWeightTolerance = 1e-14;

  // Sorts by point. Throws InvalidInput on mismatched sizes, repeated points,
  // nonpositive weights or total mass != 1.
  AtomicMeasure(std::vector<Rational> points, std::vector<double> weights);

  // Equal weights on S.
  static AtomicMeasure uniform(const FiniteRationalSet& support);

  const std::vector<Rational>& points() const noexcept { return points_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return points_.size(); }
  FiniteRationalSet support() const { return FiniteRationalSet(points_); }

 private:
  std::vector<Rational> points_;
  std::vector<double> weights_;
};

// Self-similar measure of the maps x -> (x + d) / R, d in D. Its transform is
// prod_{k >= 1} m_D(t / R^k) with m_D(s) = mean_d exp(2 pi i d s).
struct IFSMeasure {
  std::int64_t scale;
  std::vector<Rational> digits;

  // Throws InvalidInput unless scale >= 2 and digits has >= 2 distinct values.
  IFSMeasure(std::int64_t scale, std::vector<Rational> digits);

  // Scale 4, digits {0, 2}: the quarter Cantor measure.
  static IFSMeasure cantor4();

  Rational max_abs_digit() const;
};

struct FrameReport {
  double lower = 0.0;
  double upper = 0.0;
};

// How vanishing factors of an IFS product are recognised.
enum class ZeroDetection {
  symbolic,  // exact root-of-unity test on every factor that could vanish
  floating,  // plain floating-point product
};

struct TransformValue {
  Complex value;
  int depth = 0;            // factors multiplied (or index of the vanishing factor)
  bool exact_zero = false;  // a factor was certified to vanish
};

Complex atomic_transform(const AtomicMeasure& mu, const Rational& t);
Complex atomic_transform(const AtomicMeasure& mu, double t);

// |returned - true value| <= eps. Throws InvalidInput for eps <= 0.
TransformValue ifs_transform(const IFSMeasure& mu, double t, double eps);
TransformValue ifs_transform(const IFSMeasure& mu, const Rational& t, double eps,
                             ZeroDetection mode = ZeroDetection::symbolic);

// Smallest depth K for which the tail prod_{k > K} has error <= eps at t.
int ifs_truncation_depth(const IFSMeasure& mu, double abs_t, double eps);

inline constexpr int kMaxJpLevel = 20;

// { sum_{k=0}^{level} 4^k l_k : l_k in {0, 1} }, ascending.
std::vector<std::int64_t> jp_spectrum(int level);
std::vector<Rational> to_rationals(std::span<const std::int64_t> xs);

// G(i, j) = mu^(lambda_j - lambda_i).
Eigen::MatrixXcd gram_matrix(const AtomicMeasure& mu, std::span<const Rational> lambda);
Eigen::MatrixXcd gram_matrix(const IFSMeasure& mu, std::span<const Rational> lambda, double eps,
                             ZeroDetection mode = ZeroDetection::symbolic);

// Extreme eigenvalues of sum_lambda |e_lambda><e_lambda| on L^2(mu).
FrameReport frame_bounds(const AtomicMeasure& mu, std::span<const Rational> lambda);

// Q(t) = sum_lambda |mu^(t - lambda)|^2. Each IFS term is accurate to eps / |Lambda|.
double completeness_defect(const AtomicMeasure& mu, std::span<const Rational> lambda,
                           const Rational& t);
double completeness_defect(const IFSMeasure& mu, std::span<const Rational> lambda,
                           const Rational& t, double eps);
double completeness_defect(const IFSMeasure& mu, std::span<const Rational> lambda, double t,
                           double eps);

}  // namespace spectra

#endif  // SPECTRA_MEASURES_HPP
