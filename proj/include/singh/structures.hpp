#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace singh {

/// An immutable sample x_1..x_n with its summary statistics cached.
class Dataset {
 public:
  /// Throws DomainError if empty or if any sample is non-finite.
  explicit Dataset(std::vector<double> samples);

  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double sum() const noexcept { return sum_; }
  double mean() const noexcept { return mean_; }
  /// Standard deviation with the n - 1 divisor; 0 when n = 1.
  double sample_sd() const noexcept { return sd_; }
  bool is_binary() const noexcept { return binary_; }
  /// Number of ones. Throws DomainError for non-binary data.
  std::size_t successes() const;

 private:
  std::vector<double> samples_;
  double sum_ = 0.0;
  double mean_ = 0.0;
  double sd_ = 0.0;
  bool binary_ = true;
};

/// Confidence assigned to a candidate value: [lower, upper], always ordered.
/// Precise structures produce lower == upper.
struct ConfidenceValue {
  double lower = 0.0;
  double upper = 0.0;

  static ConfidenceValue precise(double value);
  /// Orders the two bounds; throws DomainError if either is outside [0, 1].
  static ConfidenceValue between(double a, double b);

  bool is_precise() const noexcept { return lower == upper; }
  friend bool operator==(const ConfidenceValue&, const ConfidenceValue&) = default;
};

/// Required confidence for one replicate. std::nullopt is the NEVER outcome:
/// no confidence level produces an interval that covers the truth.
using Requirement = std::optional<ConfidenceValue>;

enum class StructureKind {
  student_t_pivot,
  jeffreys,
  clopper_pearson,
  scaled_cbox,
  empirical_predictive,
  chebyshev_ucl,
};

std::string_view to_string(StructureKind kind) noexcept;
std::optional<StructureKind> parse_structure_kind(std::string_view name) noexcept;

struct StructureSpec {
  StructureKind kind = StructureKind::student_t_pivot;
  /// Imprecision parameter; only meaningful for scaled_cbox.
  double c = 1.0;

  static StructureSpec of(StructureKind kind) { return StructureSpec{kind, 1.0}; }
  static StructureSpec scaled(double c) { return StructureSpec{StructureKind::scaled_cbox, c}; }

  bool is_precise() const noexcept;
  bool requires_binary_data() const noexcept;
  std::size_t minimum_sample_size() const noexcept;
  /// Throws DomainError when c <= 0 for scaled_cbox.
  void validate() const;

  friend bool operator==(const StructureSpec&, const StructureSpec&) = default;
};

// Student-t pivot for a normal mean: T((mu - mean) / (s / sqrt(n)); n - 1).
// Throws DegenerateDataError for n < 2 or zero sample spread.
ConfidenceValue student_t_pivot(double mu, const Dataset& data);

// Beta(k + 1/2, n - k + 1/2) posterior CDF under the Jeffreys prior.
ConfidenceValue jeffreys(double theta, const Dataset& data);

// Clopper-Pearson c-box: the pair Beta(k + 1, n - k) and Beta(k, n - k + 1).
ConfidenceValue clopper_pearson(double theta, const Dataset& data);

// Clopper-Pearson with the unit shape offset replaced by c.
ConfidenceValue scaled_cbox(double theta, const Dataset& data, double c);

// Non-parametric predictive c-box for the next draw:
// lower = #{x_i <= x_next} / (n + 1), upper = 1 - #{x_i >= x_next} / (n + 1).
ConfidenceValue empirical_predictive(double x_next, const Dataset& data);

/// Chebyshev-inequality upper confidence limit for the mean,
/// mean + sqrt(1 / (1 - alpha) - 1) * s / sqrt(n).
double chebyshev_ucl(double alpha, const Dataset& data);

/// Smallest alpha whose Chebyshev UCL reaches mu. Returns 0 when mu does not
/// exceed the sample mean and NEVER (nullopt) when the spread is zero and mu
/// lies above the mean.
Requirement chebyshev_required_confidence(double mu, const Dataset& data);

/// Dispatches on spec.kind; `truth` is the parameter value (or next draw)
/// whose required confidence is wanted.
Requirement evaluate(const StructureSpec& spec, double truth, const Dataset& data);

}  // namespace singh
