#pragma once

#include <span>

#include "edgesamp/enumeration.hpp"

namespace edgesamp {

// max_e |p(e)/q(e) - 1| over the support of q. Throws DistributionError if the
// sizes differ or p puts mass where q has none.
double pointwise_distance(std::span<const double> p, std::span<const double> q);
double pointwise_distance(const EdgeDistribution& p, const EdgeDistribution& q);

// (1/2) sum_e |p(e) - q(e)|. Throws DistributionError if the sizes differ.
double tv_distance(std::span<const double> p, std::span<const double> q);
double tv_distance(const EdgeDistribution& p, const EdgeDistribution& q);

}  // namespace edgesamp
