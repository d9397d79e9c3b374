#include "singh/structures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "singh/errors.hpp"
#include "singh/special_math.hpp"

namespace singh {
namespace {

constexpr std::array<std::pair<StructureKind, std::string_view>, 6> kKindNames{{
    {StructureKind::student_t_pivot, "student_t_pivot"},
    {StructureKind::jeffreys, "jeffreys"},
    {StructureKind::clopper_pearson, "clopper_pearson"},
    {StructureKind::scaled_cbox, "scaled_cbox"},
    {StructureKind::empirical_predictive, "empirical_predictive"},
    {StructureKind::chebyshev_ucl, "chebyshev_ucl"},
}};

void require_probability(double theta, const char* what) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError(std::string(what) + ": theta must lie in [0, 1]");
}

// Both c-box branches; shared by clopper_pearson (c = 1) and scaled_cbox.
ConfidenceValue beta_pair(double theta, const Dataset& data, double c, const char* what) {
  require_probability(theta, what);
  const double k = static_cast<double>(data.successes());
  const double n = static_cast<double>(data.size());
  const double first = reg_inc_beta(theta, k + c, n - k);
  const double second = reg_inc_beta(theta, k, n - k + c);
  return ConfidenceValue::between(first, second);
}

}  // namespace

// Sums run over the sorted samples so the statistics depend only on the
// multiset of values, not on draw order.
Dataset::Dataset(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw DomainError("Dataset: at least one sample is required");
  for (double x : samples_) {
    if (!std::isfinite(x)) throw DomainError("Dataset: samples must be finite");
  }
  std::vector<double> sorted = samples_;
  std::sort(sorted.begin(), sorted.end());
  for (double x : sorted) {
    sum_ += x;
    if (x != 0.0 && x != 1.0) binary_ = false;
  }
  const auto n = static_cast<double>(sorted.size());
  mean_ = sum_ / n;
  if (sorted.size() > 1) {
    for (double& x : sorted) x = (x - mean_) * (x - mean_);
    std::sort(sorted.begin(), sorted.end());
    double ss = 0.0;
    for (double d : sorted) ss += d;
    sd_ = std::sqrt(ss / (n - 1.0));
  }
}

std::size_t Dataset::successes() const {
  if (!binary_) throw DomainError("structure requires binary (0/1) data");
  return static_cast<std::size_t>(sum_);
}

ConfidenceValue ConfidenceValue::precise(double value) { return between(value, value); }

ConfidenceValue ConfidenceValue::between(double a, double b) {
  if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0)) {
    throw DomainError("ConfidenceValue: bounds must lie in [0, 1]");
  }
  return a <= b ? ConfidenceValue{a, b} : ConfidenceValue{b, a};
}

std::string_view to_string(StructureKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<StructureKind> parse_structure_kind(std::string_view name) noexcept {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool StructureSpec::is_precise() const noexcept {
  return kind == StructureKind::student_t_pivot || kind == StructureKind::jeffreys ||
         kind == StructureKind::chebyshev_ucl;
}

bool StructureSpec::requires_binary_data() const noexcept {
  return kind == StructureKind::jeffreys || kind == StructureKind::clopper_pearson ||
         kind == StructureKind::scaled_cbox;
}

std::size_t StructureSpec::minimum_sample_size() const noexcept {
  return kind == StructureKind::student_t_pivot || kind == StructureKind::chebyshev_ucl ? 2 : 1;
}

void StructureSpec::validate() const {
  if (kind == StructureKind::scaled_cbox && !(c > 0.0 && std::isfinite(c))) {
    throw DomainError("c must be positive");
  }
}

ConfidenceValue student_t_pivot(double mu, const Dataset& data) {
  if (data.size() < 2) throw DegenerateDataError("student_t_pivot: needs at least two samples");
  if (data.sample_sd() == 0.0) throw DegenerateDataError("student_t_pivot: sample standard deviation is zero");
  if (std::isnan(mu)) throw DomainError("student_t_pivot: mu is NaN");
  const double n = static_cast<double>(data.size());
  const double t = (mu - data.mean()) / (data.sample_sd() / std::sqrt(n));
  return ConfidenceValue::precise(student_t_cdf(t, n - 1.0));
}

ConfidenceValue jeffreys(double theta, const Dataset& data) {
  require_probability(theta, "jeffreys");
  const double k = static_cast<double>(data.successes());
  const double n = static_cast<double>(data.size());
  return ConfidenceValue::precise(reg_inc_beta(theta, k + 0.5, n - k + 0.5));
}

ConfidenceValue clopper_pearson(double theta, const Dataset& data) {
  return beta_pair(theta, data, 1.0, "clopper_pearson");
}

ConfidenceValue scaled_cbox(double theta, const Dataset& data, double c) {
  if (!(c > 0.0 && std::isfinite(c))) throw DomainError("c must be positive");
  return beta_pair(theta, data, c, "scaled_cbox");
}

ConfidenceValue empirical_predictive(double x_next, const Dataset& data) {
  if (std::isnan(x_next)) throw DomainError("empirical_predictive: x_next is NaN");
  std::size_t at_most = 0;
  std::size_t at_least = 0;
  for (double x : data.samples()) {
    if (x <= x_next) ++at_most;
    if (x >= x_next) ++at_least;
  }
  const double denom = static_cast<double>(data.size() + 1);
  const double lower = static_cast<double>(at_most) / denom;
  const double upper = static_cast<double>(data.size() + 1 - at_least) / denom;
  return ConfidenceValue::between(lower, upper);
}

double chebyshev_ucl(double alpha, const Dataset& data) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("chebyshev_ucl: alpha must lie in [0, 1)");
  if (data.size() < 2) throw DegenerateDataError("chebyshev_ucl: needs at least two samples");
  const double n = static_cast<double>(data.size());
  return data.mean() + std::sqrt(1.0 / (1.0 - alpha) - 1.0) * data.sample_sd() / std::sqrt(n);
}

Requirement chebyshev_required_confidence(double mu, const Dataset& data) {
  if (data.size() < 2) throw DegenerateDataError("chebyshev_required_confidence: needs at least two samples");
  if (std::isnan(mu)) throw DomainError("chebyshev_required_confidence: mu is NaN");
  if (mu <= data.mean()) return ConfidenceValue::precise(0.0);
  if (data.sample_sd() == 0.0) return std::nullopt;
  const double n = static_cast<double>(data.size());
  const double k = (mu - data.mean()) * std::sqrt(n) / data.sample_sd();
  // 1 - 1 / (k^2 + 1), written to avoid cancellation for small k.
  const double k2 = k * k;
  if (!std::isfinite(k2)) return ConfidenceValue::precise(1.0);
  return ConfidenceValue::precise(k2 / (k2 + 1.0));
}

Requirement evaluate(const StructureSpec& spec, double truth, const Dataset& data) {
  switch (spec.kind) {
    case StructureKind::student_t_pivot:
      return student_t_pivot(truth, data);
    case StructureKind::jeffreys:
      return jeffreys(truth, data);
    case StructureKind::clopper_pearson:
      return clopper_pearson(truth, data);
    case StructureKind::scaled_cbox:
      return scaled_cbox(truth, data, spec.c);
    case StructureKind::empirical_predictive:
      return empirical_predictive(truth, data);
    case StructureKind::chebyshev_ucl:
      return chebyshev_required_confidence(truth, data);
  }
  throw DomainError("evaluate: unknown structure kind");
}

}  // namespace singh
