#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace singh {

/// Address of an independent random stream: a master seed plus an index.
///
/// The pair is hashed into a 64-bit key and an odd Weyl increment, so
/// replicate i draws the same numbers no matter which thread runs it or how
/// many replicates run in total. substream() nests addresses, e.g. grid
/// point j, replicate i.
class SeededStream {
 public:
  constexpr explicit SeededStream(std::uint64_t master_seed, std::uint64_t stream_index = 0) noexcept
      : master_seed_(master_seed), stream_index_(stream_index) {}

  constexpr std::uint64_t master_seed() const noexcept { return master_seed_; }
  constexpr std::uint64_t stream_index() const noexcept { return stream_index_; }

  std::uint64_t key() const noexcept;
  std::uint64_t increment() const noexcept;

  SeededStream substream(std::uint64_t index) const noexcept { return SeededStream(key(), index); }

  friend constexpr bool operator==(const SeededStream&, const SeededStream&) = default;

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
};

/// SplitMix64 generator positioned at the start of a SeededStream.
/// Satisfies UniformRandomBitGenerator.
class StreamEngine {
 public:
  using result_type = std::uint64_t;

  explicit StreamEngine(const SeededStream& stream) noexcept
      : state_(stream.key()), increment_(stream.increment()) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
  std::uint64_t increment_;
};

std::vector<double> sample_normal(const SeededStream& stream, double mu, double sigma, std::size_t n);

/// Indicator draws returned as 0.0 / 1.0 so they feed a Dataset directly.
std::vector<double> sample_bernoulli(const SeededStream& stream, double p, std::size_t n);

/// Takes 0 with probability 1 - p and target_mean / p with probability p.
std::vector<double> sample_scaled_bernoulli(const SeededStream& stream, double p, double target_mean,
                                            std::size_t n);

std::vector<double> sample_mixture(const SeededStream& stream, std::span<const double> weights,
                                   std::span<const double> mus, std::span<const double> sigmas,
                                   std::size_t n);

}  // namespace singh
