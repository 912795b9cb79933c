#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "edgesamp/rng.hpp"

namespace edgesamp {

// Inverse-CDF sampler over non-negative weights (need not be normalized).
// O(n) build, O(log n) per draw; zero-weight outcomes are never returned.
class DiscreteDistribution {
 public:
  DiscreteDistribution() = default;
  explicit DiscreteDistribution(std::span<const double> weights);

  std::size_t sample(Rng& rng) const;

  std::size_t size() const { return cumulative_.size(); }
  double total() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }
  double probability(std::size_t i) const;
  std::span<const double> cumulative() const { return cumulative_; }

 private:
  std::vector<double> cumulative_;
  std::size_t last_positive_ = 0;
};

}  // namespace edgesamp
