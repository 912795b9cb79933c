#include "edgesamp/distance.hpp"

#include <algorithm>
#include <cmath>

namespace edgesamp {

namespace {

void check_sizes(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw DistributionError("distributions are over different supports");
}

}  // namespace

double pointwise_distance(std::span<const double> p, std::span<const double> q) {
  check_sizes(p, q);
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (q[i] == 0.0) {
      if (p[i] != 0.0) throw DistributionError("p has mass outside the support of q");
      continue;
    }
    worst = std::max(worst, std::abs(p[i] / q[i] - 1.0));
  }
  return worst;
}

double pointwise_distance(const EdgeDistribution& p, const EdgeDistribution& q) {
  return pointwise_distance(p.mass, q.mass);
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
  check_sizes(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

double tv_distance(const EdgeDistribution& p, const EdgeDistribution& q) {
  return tv_distance(p.mass, q.mass);
}

EdgeDistribution to_double(const RationalEdgeDistribution& d) {
  EdgeDistribution out;
  out.mass.reserve(d.mass.size());
  for (const auto& x : d.mass) out.mass.push_back(to_double(x));
  out.fail_mass = to_double(d.fail_mass);
  out.conditioned = d.conditioned;
  return out;
}

}  // namespace edgesamp
