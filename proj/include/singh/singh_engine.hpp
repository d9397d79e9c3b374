#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "singh/sampling.hpp"
#include "singh/structures.hpp"

namespace singh {

enum class Family { normal, bernoulli, scaled_bernoulli, gaussian_mixture };

std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

/// A sampling model with a known truth.
///
/// The truth is the parameter being inferred (normal: mu, bernoulli: p,
/// scaled_bernoulli: the mean, mixture: the mixture mean) or, for predictive
/// targets, the (n + 1)-th draw.
struct TargetSpec {
  Family family = Family::normal;
  double mu = 0.0;
  double sigma = 1.0;
  double p = 0.5;
  double mean = 1.0;
  std::vector<double> weights;
  std::vector<double> mus;
  std::vector<double> sigmas;
  bool predictive = false;

  static TargetSpec normal(double mu, double sigma);
  static TargetSpec bernoulli(double p);
  static TargetSpec scaled_bernoulli(double p, double mean);
  static TargetSpec gaussian_mixture(std::vector<double> weights, std::vector<double> mus,
                                     std::vector<double> sigmas);

  TargetSpec as_predictive() const;
  /// Copy with the grid-swept parameter replaced: p for the Bernoulli
  /// families, mu for normal. Throws DomainError for mixtures.
  TargetSpec with_grid_value(double value) const;

  /// Throws DomainError naming the violated constraint.
  void validate() const;
  /// Parameter value the structure is asked about. Undefined for predictive targets.
  double theta0() const;
  /// Bernoulli families: the structure sees the data only through the success count.
  bool is_discrete() const noexcept { return family == Family::bernoulli || family == Family::scaled_bernoulli; }

  std::vector<double> draw(const SeededStream& stream, std::size_t count) const;

  friend bool operator==(const TargetSpec&, const TargetSpec&) = default;
};

/// Empirical CDF of required-confidence values.
///
/// Monte Carlo curves hold m replicates: the finite values sorted ascending
/// plus a count of NEVER outcomes, which are excluded from coverage at every
/// alpha. Exact curves (from enumeration) carry a probability weight per
/// value and report replicates() == 0.
class SinghCurve {
 public:
  SinghCurve() = default;

  static SinghCurve from_replicates(std::vector<double> required, std::size_t never_count);
  /// atoms: (value, weight) pairs with weights summing, with never_weight, to 1.
  static SinghCurve weighted(std::vector<std::pair<double, double>> atoms, double never_weight);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t never_count() const noexcept { return never_count_; }
  double never_weight() const noexcept;
  std::size_t replicates() const noexcept { return m_; }
  bool is_exact() const noexcept { return m_ == 0; }

  /// Fraction of replicates (or probability mass) with required confidence <= alpha.
  double eval(double alpha) const noexcept;
  /// Same, with strict inequality (left limit of the step function).
  double eval_below(double alpha) const noexcept;

  friend bool operator==(const SinghCurve&, const SinghCurve&) = default;

 private:
  std::vector<double> values_;
  std::vector<double> cumulative_;
  std::size_t never_count_ = 0;
  double never_weight_ = 0.0;
  std::size_t m_ = 0;
};

/// Curves from the two components of an imprecise structure's interval.
/// lower_curve collects the lower components and so reports higher coverage.
struct SinghBand {
  SinghCurve lower_curve;
  SinghCurve upper_curve;

  friend bool operator==(const SinghBand&, const SinghBand&) = default;
};

using SinghResult = std::variant<SinghCurve, SinghBand>;

inline bool is_band(const SinghResult& r) noexcept { return std::holds_alternative<SinghBand>(r); }

/// The curve that must stay above the diagonal: the precise curve, or the
/// band's lower_curve.
const SinghCurve& coverage_curve(const SinghResult& result) noexcept;

enum class Classification { valid, overconfident, conservative, favourable };

std::string_view to_string(Classification c) noexcept;

struct CoverageReport {
  Classification classification = Classification::valid;
  bool valid = true;
  double max_deficit = 0.0;
  double conservatism_area = 0.0;
  double dkw_epsilon = 0.0;
  std::size_t m = 0;
  std::size_t never_count = 0;
};

struct RunOptions {
  /// Worker threads for replicate evaluation; 0 picks hardware concurrency.
  unsigned workers = 0;
};

inline constexpr std::size_t kDefaultAlphaGrid = 1001;
inline constexpr double kDefaultDelta = 0.01;

/// sqrt(ln(2 / delta) / (2 m)); 0 when m == 0 (exact curves).
double dkw_epsilon(std::size_t m, double delta);

/// Monte Carlo Singh plot. Replicate i draws its data from stream.substream(i),
/// so the result does not depend on thread count or scheduling.
SinghResult singh_curve(const StructureSpec& structure, const TargetSpec& target, std::size_t n,
                        std::size_t m, const SeededStream& stream, RunOptions options = {});

/// Exact Singh plot for Bernoulli-family targets by enumerating the success
/// count k = 0..n with Binomial(n, p) weights.
SinghResult exact_singh_curve(const StructureSpec& structure, const TargetSpec& target, std::size_t n);

inline double eval_curve(const SinghCurve& curve, double alpha) noexcept { return curve.eval(alpha); }

CoverageReport classify(const SinghResult& result, double delta = kDefaultDelta,
                        std::size_t grid = kDefaultAlphaGrid);

/// max over alpha_j = j / (grid - 1) of alpha_j - S(alpha_j) on the coverage curve.
double max_coverage_deficit(const SinghResult& result, std::size_t grid = kDefaultAlphaGrid);

/// alpha - S(alpha) on the coverage curve at one alpha.
double coverage_deficit_at(const SinghResult& result, double alpha);

/// Trapezoidal area between the band's curves; 0 for precise results.
double conservatism_area(const SinghResult& result, std::size_t grid = kDefaultAlphaGrid);

/// Exact Kolmogorov-Smirnov distance between the curve and the U(0, 1) CDF.
double uniform_sup_distance(const SinghCurve& curve);

/// max over the alpha grid of |a(alpha) - b(alpha)|.
double grid_sup_distance(const SinghCurve& a, const SinghCurve& b, std::size_t grid = kDefaultAlphaGrid);

namespace detail {

/// Runs body(i) for i in [0, count) across worker threads. If any call
/// throws, the exception from the lowest index is rethrown.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace detail

}  // namespace singh
