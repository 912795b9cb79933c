#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <span>
#include <utility>
#include <vector>

#include "edgesamp/discrete_distribution.hpp"
#include "edgesamp/graph.hpp"
#include "edgesamp/rng.hpp"

namespace edgesamp {

template <class T>
struct CouplingCell {
  std::size_t x = 0;
  std::size_t y = 0;
  T mass = T(0);
};

// Joint table of the maximal coupling of p and q (same index set, each summing
// to 1): the diagonal carries min(p, q); the off-diagonal mass is the product
// of the residuals (p - min) and (q - min) divided by their common total
// 1 - sum(min) = TV(p, q). Residual supports are disjoint, so every
// off-diagonal cell has x != y and the disagreement mass is exactly TV.
template <class T>
std::vector<CouplingCell<T>> maximal_coupling_table(std::span<const T> p, std::span<const T> q) {
  if (p.size() != q.size()) throw std::invalid_argument("coupling needs distributions over the same index set");
  std::vector<CouplingCell<T>> cells;
  std::vector<std::pair<std::size_t, T>> excess_p;
  std::vector<std::pair<std::size_t, T>> excess_q;
  T overlap(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const T common = p[i] < q[i] ? p[i] : q[i];
    overlap += common;
    if (common > T(0)) cells.push_back({i, i, common});
    if (p[i] > common) excess_p.emplace_back(i, p[i] - common);
    if (q[i] > common) excess_q.emplace_back(i, q[i] - common);
  }
  const T residual = T(1) - overlap;
  if (residual > T(0)) {
    for (const auto& [x, px] : excess_p) {
      for (const auto& [y, qy] : excess_q) cells.push_back({x, y, px * qy / residual});
    }
  }
  return cells;
}

// Sampler for the maximal coupling: with probability sum(min(p, q)) both sides
// take the same draw from the normalized overlap, otherwise each side draws
// independently from its normalized residual.
class MaximalCoupling {
 public:
  MaximalCoupling(std::span<const double> p, std::span<const double> q);

  // (x ~ p, y ~ q) jointly.
  std::pair<std::size_t, std::size_t> sample(Rng& rng) const;

  double overlap() const { return overlap_; }
  double tv() const { return 1.0 - overlap_; }

 private:
  double overlap_ = 0;
  std::optional<DiscreteDistribution> common_;
  std::optional<DiscreteDistribution> residual_p_;
  std::optional<DiscreteDistribution> residual_q_;
};

// Downstream procedure for the coupling testbed: consumes a sequence of edge
// samples plus an auxiliary seed and reports whether its output landed in the
// accepted set. Must be deterministic given its arguments.
using DownstreamAlgorithm = std::function<bool(std::span<const Edge> samples, std::uint64_t aux_seed)>;

// Estimates sum_v d(v)^2 / m as the mean of d(u) + d(v) over the sampled edges
// and accepts when the estimate is within relative_tolerance of the truth.
DownstreamAlgorithm degree_sum_estimator_test(const Graph& g, double relative_tolerance);

struct CouplingOptions {
  double epsilon = 0.5;
  std::size_t k = 10;
  std::size_t trials = 10'000;
  std::uint64_t seed = 0;
  std::optional<std::size_t> m_est;
};

struct CouplingReport {
  double tv_analytic = 0;         // TV(D, U) over directed edges
  double pointwise_analytic = 0;  // pointwise distance of D from U
  std::size_t k = 0;
  std::size_t trials = 0;
  std::uint64_t draws = 0;
  std::uint64_t disagreements = 0;
  double per_query_disagreement = 0;
  double per_query_stderr = 0;
  double stream_difference = 0;  // P[any of the k coupled pairs differ]
  double stream_stderr = 0;
  double success_uniform = 0;    // P[A in O], A fed uniform edges
  double success_approx = 0;     // P[A' in O], A' fed approximate edges
  double downstream_divergence = 0;
};

// Couples the approximate sampler's exact output distribution D (from the
// brute-force enumeration, so the graph must be small) with the uniform
// distribution U, runs the algorithm on both coupled streams trial by trial,
// and reports disagreement statistics. Throws ResourceLimitError for graphs
// beyond the enumeration limits.
CouplingReport coupled_run(const DownstreamAlgorithm& algorithm, const Graph& g, const CouplingOptions& options);

}  // namespace edgesamp
