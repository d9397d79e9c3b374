#include "singh/singh_engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "singh/errors.hpp"
#include "singh/special_math.hpp"

namespace singh {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 4> kFamilyNames{{
    {Family::normal, "normal"},
    {Family::bernoulli, "bernoulli"},
    {Family::scaled_bernoulli, "scaled_bernoulli"},
    {Family::gaussian_mixture, "gaussian_mixture"},
}};

// Exact curves are compared against the diagonal with this slack instead of
// a zero DKW band, so rounding in the enumerated weights cannot flip a label.
constexpr double kExactSlack = 1e-12;

double grid_alpha(std::size_t j, std::size_t grid) {
  return static_cast<double>(j) / static_cast<double>(grid - 1);
}

void require_grid(std::size_t grid) {
  if (grid < 2) throw DomainError("alpha grid needs at least two points");
}

void check_run_inputs(const StructureSpec& structure, const TargetSpec& target, std::size_t n) {
  structure.validate();
  target.validate();
  if (n < structure.minimum_sample_size()) {
    throw DomainError(std::string(to_string(structure.kind)) + " needs n >= " +
                      std::to_string(structure.minimum_sample_size()));
  }
  if (structure.requires_binary_data() && target.family != Family::bernoulli) {
    throw DomainError(std::string(to_string(structure.kind)) + " requires a bernoulli target");
  }
}

SinghResult assemble(const StructureSpec& structure, const std::vector<Requirement>& requirements) {
  std::vector<double> lower;
  std::vector<double> upper;
  lower.reserve(requirements.size());
  if (!structure.is_precise()) upper.reserve(requirements.size());
  std::size_t never = 0;
  for (const auto& r : requirements) {
    if (!r) {
      ++never;
      continue;
    }
    lower.push_back(r->lower);
    if (!structure.is_precise()) upper.push_back(r->upper);
  }
  if (structure.is_precise()) return SinghCurve::from_replicates(std::move(lower), never);
  return SinghBand{SinghCurve::from_replicates(std::move(lower), never),
                   SinghCurve::from_replicates(std::move(upper), never)};
}

}  // namespace

// ---------------------------------------------------------------------------
// TargetSpec

std::string_view to_string(Family family) noexcept {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

TargetSpec TargetSpec::normal(double mu, double sigma) {
  TargetSpec t;
  t.family = Family::normal;
  t.mu = mu;
  t.sigma = sigma;
  return t;
}

TargetSpec TargetSpec::bernoulli(double p) {
  TargetSpec t;
  t.family = Family::bernoulli;
  t.p = p;
  return t;
}

TargetSpec TargetSpec::scaled_bernoulli(double p, double mean) {
  TargetSpec t;
  t.family = Family::scaled_bernoulli;
  t.p = p;
  t.mean = mean;
  return t;
}

TargetSpec TargetSpec::gaussian_mixture(std::vector<double> weights, std::vector<double> mus,
                                        std::vector<double> sigmas) {
  TargetSpec t;
  t.family = Family::gaussian_mixture;
  t.weights = std::move(weights);
  t.mus = std::move(mus);
  t.sigmas = std::move(sigmas);
  return t;
}

TargetSpec TargetSpec::as_predictive() const {
  TargetSpec t = *this;
  t.predictive = true;
  return t;
}

TargetSpec TargetSpec::with_grid_value(double value) const {
  TargetSpec t = *this;
  switch (family) {
    case Family::normal:
      t.mu = value;
      break;
    case Family::bernoulli:
    case Family::scaled_bernoulli:
      t.p = value;
      break;
    case Family::gaussian_mixture:
      throw DomainError("gaussian_mixture targets have no grid parameter");
  }
  return t;
}

void TargetSpec::validate() const {
  switch (family) {
    case Family::normal:
      if (!std::isfinite(mu)) throw DomainError("mu must be finite");
      if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be positive");
      break;
    case Family::bernoulli:
      if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1]");
      break;
    case Family::scaled_bernoulli:
      if (!(p > 0.0 && p <= 1.0)) throw DomainError("p must lie in (0, 1]");
      if (!(mean > 0.0) || !std::isfinite(mean)) throw DomainError("mean must be positive");
      break;
    case Family::gaussian_mixture: {
      if (weights.empty()) throw DomainError("mixture needs at least one component");
      if (weights.size() != mus.size() || weights.size() != sigmas.size()) {
        throw DomainError("weights, mus and sigmas must have equal length");
      }
      double total = 0.0;
      for (std::size_t j = 0; j < weights.size(); ++j) {
        if (!(weights[j] >= 0.0 && weights[j] <= 1.0)) throw DomainError("weights must lie in [0, 1]");
        if (!std::isfinite(mus[j])) throw DomainError("mus must be finite");
        if (!(sigmas[j] > 0.0) || !std::isfinite(sigmas[j])) throw DomainError("sigmas must be positive");
        total += weights[j];
      }
      if (std::fabs(total - 1.0) > 1e-9) throw DomainError("weights must sum to 1");
      break;
    }
  }
}

double TargetSpec::theta0() const {
  switch (family) {
    case Family::normal:
      return mu;
    case Family::bernoulli:
      return p;
    case Family::scaled_bernoulli:
      return mean;
    case Family::gaussian_mixture: {
      double m = 0.0;
      for (std::size_t j = 0; j < weights.size(); ++j) m += weights[j] * mus[j];
      return m;
    }
  }
  return 0.0;
}

std::vector<double> TargetSpec::draw(const SeededStream& stream, std::size_t count) const {
  switch (family) {
    case Family::normal:
      return sample_normal(stream, mu, sigma, count);
    case Family::bernoulli:
      return sample_bernoulli(stream, p, count);
    case Family::scaled_bernoulli:
      return sample_scaled_bernoulli(stream, p, mean, count);
    case Family::gaussian_mixture:
      return sample_mixture(stream, weights, mus, sigmas, count);
  }
  throw DomainError("unknown target family");
}

// ---------------------------------------------------------------------------
// SinghCurve

SinghCurve SinghCurve::from_replicates(std::vector<double> required, std::size_t never_count) {
  SinghCurve c;
  std::sort(required.begin(), required.end());
  c.values_ = std::move(required);
  c.never_count_ = never_count;
  c.m_ = c.values_.size() + never_count;
  if (c.m_ == 0) throw DomainError("SinghCurve needs at least one replicate");
  return c;
}

SinghCurve SinghCurve::weighted(std::vector<std::pair<double, double>> atoms, double never_weight) {
  std::sort(atoms.begin(), atoms.end());
  SinghCurve c;
  double running = 0.0;
  for (const auto& [value, weight] : atoms) {
    if (!(weight >= 0.0)) throw DomainError("SinghCurve weights must be non-negative");
    if (weight == 0.0) continue;
    running = std::min(1.0, running + weight);
    if (!c.values_.empty() && c.values_.back() == value) {
      c.cumulative_.back() = running;
    } else {
      c.values_.push_back(value);
      c.cumulative_.push_back(running);
    }
  }
  c.never_weight_ = never_weight;
  return c;
}

double SinghCurve::never_weight() const noexcept {
  if (is_exact()) return never_weight_;
  return static_cast<double>(never_count_) / static_cast<double>(m_);
}

double SinghCurve::eval(double alpha) const noexcept {
  const auto idx = static_cast<std::size_t>(std::upper_bound(values_.begin(), values_.end(), alpha) - values_.begin());
  if (is_exact()) return idx == 0 ? 0.0 : cumulative_[idx - 1];
  return static_cast<double>(idx) / static_cast<double>(m_);
}

double SinghCurve::eval_below(double alpha) const noexcept {
  const auto idx = static_cast<std::size_t>(std::lower_bound(values_.begin(), values_.end(), alpha) - values_.begin());
  if (is_exact()) return idx == 0 ? 0.0 : cumulative_[idx - 1];
  return static_cast<double>(idx) / static_cast<double>(m_);
}

const SinghCurve& coverage_curve(const SinghResult& result) noexcept {
  if (const auto* band = std::get_if<SinghBand>(&result)) return band->lower_curve;
  return std::get<SinghCurve>(result);
}

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::valid:
      return "valid";
    case Classification::overconfident:
      return "overconfident";
    case Classification::conservative:
      return "conservative";
    case Classification::favourable:
      return "favourable";
  }
  return "unknown";
}

double dkw_epsilon(std::size_t m, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  if (m == 0) return 0.0;
  return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(m)));
}

// ---------------------------------------------------------------------------
// Generation

namespace detail {

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t threads = std::min<std::size_t>(workers, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  // Indices are claimed in increasing order, so once a failure stops new
  // claims every lower index has already been claimed and will finish.
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex error_mutex;
  std::size_t error_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error;

  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
        stop.store(true, std::memory_order_relaxed);
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

SinghResult singh_curve(const StructureSpec& structure, const TargetSpec& target, std::size_t n,
                        std::size_t m, const SeededStream& stream, RunOptions options) {
  check_run_inputs(structure, target, n);
  if (m < 1) throw DomainError("m must be at least 1");

  const std::size_t draws = target.predictive ? n + 1 : n;
  const double theta0 = target.predictive ? 0.0 : target.theta0();
  std::vector<Requirement> requirements(m);
  detail::parallel_for(m, options.workers, [&](std::size_t i) {
    auto x = target.draw(stream.substream(i), draws);
    double truth = theta0;
    if (target.predictive) {
      truth = x.back();
      x.pop_back();
    }
    requirements[i] = evaluate(structure, truth, Dataset(std::move(x)));
  });
  return assemble(structure, requirements);
}

SinghResult exact_singh_curve(const StructureSpec& structure, const TargetSpec& target, std::size_t n) {
  if (!target.is_discrete() || target.predictive) {
    throw DomainError("exact_singh_curve supports bernoulli and scaled_bernoulli targets only");
  }
  check_run_inputs(structure, target, n);

  const double high = target.family == Family::bernoulli ? 1.0 : target.mean / target.p;
  const double truth = target.theta0();
  std::vector<std::pair<double, double>> lower;
  std::vector<std::pair<double, double>> upper;
  double never = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double w = binomial_pmf(k, n, target.p);
    if (w == 0.0) continue;
    std::vector<double> x(n, 0.0);
    std::fill_n(x.begin(), k, high);
    const auto r = evaluate(structure, truth, Dataset(std::move(x)));
    if (!r) {
      never += w;
      continue;
    }
    lower.emplace_back(r->lower, w);
    upper.emplace_back(r->upper, w);
  }
  if (structure.is_precise()) return SinghCurve::weighted(std::move(lower), never);
  return SinghBand{SinghCurve::weighted(std::move(lower), never), SinghCurve::weighted(std::move(upper), never)};
}

// ---------------------------------------------------------------------------
// Metrics

CoverageReport classify(const SinghResult& result, double delta, std::size_t grid) {
  require_grid(grid);
  const SinghCurve& cov = coverage_curve(result);
  const SinghBand* band = std::get_if<SinghBand>(&result);

  CoverageReport report;
  report.m = cov.replicates();
  report.never_count = cov.never_count();
  report.dkw_epsilon = dkw_epsilon(report.m, delta);
  const double tol = cov.is_exact() ? kExactSlack : report.dkw_epsilon;

  bool below = false;
  bool outside_tube = false;
  bool slack = false;
  double deficit = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < grid; ++j) {
    const double a = grid_alpha(j, grid);
    const double s = cov.eval(a);
    deficit = std::max(deficit, a - s);
    if (s < a - tol) below = true;
    if (std::fabs(s - a) > tol) outside_tube = true;
    if (band != nullptr) {
      if (s - band->upper_curve.eval(a) > 2.0 * tol) slack = true;
    } else if (s > a + tol) {
      slack = true;
    }
  }

  report.max_deficit = deficit;
  report.conservatism_area = conservatism_area(result, grid);
  report.valid = !below;
  if (below) {
    report.classification = Classification::overconfident;
  } else if (!outside_tube) {
    report.classification = Classification::favourable;
  } else if (slack) {
    report.classification = Classification::conservative;
  } else {
    report.classification = Classification::valid;
  }
  return report;
}

double max_coverage_deficit(const SinghResult& result, std::size_t grid) {
  require_grid(grid);
  const SinghCurve& cov = coverage_curve(result);
  double deficit = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < grid; ++j) {
    const double a = grid_alpha(j, grid);
    deficit = std::max(deficit, a - cov.eval(a));
  }
  return deficit;
}

double coverage_deficit_at(const SinghResult& result, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0, 1]");
  return alpha - coverage_curve(result).eval(alpha);
}

double conservatism_area(const SinghResult& result, std::size_t grid) {
  require_grid(grid);
  const auto* band = std::get_if<SinghBand>(&result);
  if (band == nullptr) return 0.0;
  const double h = 1.0 / static_cast<double>(grid - 1);
  double area = 0.0;
  for (std::size_t j = 0; j < grid; ++j) {
    const double a = grid_alpha(j, grid);
    const double gap = band->lower_curve.eval(a) - band->upper_curve.eval(a);
    area += (j == 0 || j + 1 == grid) ? 0.5 * gap : gap;
  }
  return std::clamp(area * h, 0.0, 1.0);
}

double uniform_sup_distance(const SinghCurve& curve) {
  double d = std::fabs(curve.eval(1.0) - 1.0);
  const auto values = curve.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && values[i] == values[i - 1]) continue;
    const double v = values[i];
    d = std::max({d, std::fabs(curve.eval(v) - v), std::fabs(curve.eval_below(v) - v)});
  }
  return d;
}

double grid_sup_distance(const SinghCurve& a, const SinghCurve& b, std::size_t grid) {
  require_grid(grid);
  double d = 0.0;
  for (std::size_t j = 0; j < grid; ++j) {
    const double x = grid_alpha(j, grid);
    d = std::max(d, std::fabs(a.eval(x) - b.eval(x)));
  }
  return d;
}

}  // namespace singh
