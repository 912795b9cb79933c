#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace edgesamp {

// Seedable, splittable random source. Every stream is a 64-bit Mersenne
// Twister whose seed is mixed from (master seed, stream id) with SplitMix64,
// so sibling streams are decorrelated and reproducible.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0, std::uint64_t stream = 0);

  // Independent child stream; does not advance this generator.
  [[nodiscard]] Rng split(std::uint64_t stream) const;

  static constexpr result_type min() { return std::numeric_limits<result_type>::min(); }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return engine_(); }

  // Uniform on [0, n). n must be positive.
  std::uint64_t uniform_index(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }

  // Uniform on [1, n].
  std::uint64_t uniform_one_based(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(1, n)(engine_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace edgesamp
