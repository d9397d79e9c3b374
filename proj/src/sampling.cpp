#include "singh/sampling.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "singh/errors.hpp"

namespace singh {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Variant 13 finalizer; used for the increment so key and gamma decorrelate.
std::uint64_t mix64_variant(std::uint64_t z) noexcept {
  z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
  z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
  return z ^ (z >> 33);
}

void require_count(std::size_t n) {
  if (n < 1) throw DomainError("sample count must be at least 1");
}

}  // namespace

std::uint64_t SeededStream::key() const noexcept {
  return mix64(mix64(master_seed_) + kGolden * (stream_index_ + 1));
}

std::uint64_t SeededStream::increment() const noexcept {
  const std::uint64_t g = mix64_variant(key() ^ kGolden) | 1ULL;
  // Reject increments with too few bit transitions (as SplittableRandom does).
  return std::popcount(g ^ (g >> 1)) < 24 ? g ^ 0xaaaaaaaaaaaaaaaaULL : g;
}

StreamEngine::result_type StreamEngine::operator()() noexcept {
  state_ += increment_;
  return mix64(state_);
}

std::vector<double> sample_normal(const SeededStream& stream, double mu, double sigma, std::size_t n) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("sample_normal: sigma must be positive");
  if (!std::isfinite(mu)) throw DomainError("sample_normal: mu must be finite");
  require_count(n);
  StreamEngine engine(stream);
  std::normal_distribution<double> standard;
  std::vector<double> out(n);
  for (auto& x : out) x = mu + sigma * standard(engine);
  return out;
}

std::vector<double> sample_bernoulli(const SeededStream& stream, double p, std::size_t n) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("sample_bernoulli: p must lie in [0, 1]");
  require_count(n);
  StreamEngine engine(stream);
  std::vector<double> out(n);
  for (auto& x : out) x = engine.uniform() < p ? 1.0 : 0.0;
  return out;
}

std::vector<double> sample_scaled_bernoulli(const SeededStream& stream, double p, double target_mean,
                                            std::size_t n) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("sample_scaled_bernoulli: p must lie in (0, 1]");
  if (!(target_mean > 0.0) || !std::isfinite(target_mean)) {
    throw DomainError("sample_scaled_bernoulli: target_mean must be positive");
  }
  const double high = target_mean / p;
  auto out = sample_bernoulli(stream, p, n);
  for (auto& x : out) x *= high;
  return out;
}

std::vector<double> sample_mixture(const SeededStream& stream, std::span<const double> weights,
                                   std::span<const double> mus, std::span<const double> sigmas,
                                   std::size_t n) {
  if (weights.empty() || weights.size() != mus.size() || weights.size() != sigmas.size()) {
    throw DomainError("sample_mixture: weights, mus and sigmas must be non-empty and equal length");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (!(weights[j] >= 0.0 && weights[j] <= 1.0)) throw DomainError("sample_mixture: weights must lie in [0, 1]");
    if (!(sigmas[j] > 0.0) || !std::isfinite(sigmas[j])) throw DomainError("sample_mixture: sigmas must be positive");
    if (!std::isfinite(mus[j])) throw DomainError("sample_mixture: mus must be finite");
    total += weights[j];
  }
  if (std::fabs(total - 1.0) > 1e-9) throw DomainError("sample_mixture: weights must sum to 1");
  if (weights.size() == 1) return sample_normal(stream, mus[0], sigmas[0], n);
  require_count(n);

  std::size_t last_positive = 0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] > 0.0) last_positive = j;
  }

  StreamEngine engine(stream);
  std::normal_distribution<double> standard;
  std::vector<double> out(n);
  for (auto& x : out) {
    const double u = engine.uniform() * total;
    std::size_t pick = last_positive;
    double cumulative = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      cumulative += weights[j];
      if (u < cumulative) {
        pick = j;
        break;
      }
    }
    x = mus[pick] + sigmas[pick] * standard(engine);
  }
  return out;
}

}  // namespace singh
