#include "edgesamp/discrete_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgesamp {

DiscreteDistribution::DiscreteDistribution(std::span<const double> weights) {
  cumulative_.reserve(weights.size());
  double running = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("weights must be finite and non-negative");
    running += w;
    cumulative_.push_back(running);
    if (w > 0.0) {
      last_positive_ = i;
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("distribution has no positive weight");
}

std::size_t DiscreteDistribution::sample(Rng& rng) const {
  const double x = rng.uniform01() * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
  const auto i = static_cast<std::size_t>(it - cumulative_.begin());
  return std::min(i, last_positive_);
}

double DiscreteDistribution::probability(std::size_t i) const {
  const double prev = i == 0 ? 0.0 : cumulative_[i - 1];
  return (cumulative_[i] - prev) / cumulative_.back();
}

}  // namespace edgesamp
