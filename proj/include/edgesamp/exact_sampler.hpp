#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "edgesamp/approx_sampler.hpp"
#include "edgesamp/discrete_distribution.hpp"
#include "edgesamp/errors.hpp"
#include "edgesamp/graph.hpp"
#include "edgesamp/htable.hpp"
#include "edgesamp/query_oracle.hpp"

namespace edgesamp {

// Smallest ell with 2^-(ell-1) <= delta, computed exactly in T. Agrees with
// ell_of() for doubles.
template <class T>
int ell_for(const T& delta) {
  if (!(delta > T(0) && delta <= T(1) / T(2))) throw std::invalid_argument("delta must lie in (0, 1/2]");
  int c = 0;
  T power(1);
  while (power > delta) {
    power /= T(2);
    ++c;
  }
  return c + 1;
}

// The walk sampler with cap ell hits directed edge (v, w) in one attempt with
// probability (1 - h[v][ell-1]) / (ell n theta): the walk reaches heavy v at
// step k-1 after k-2 heavy-only moves, and the miss mass h[v][ell-1] is what
// escaped to light vertices on the way. The correction uses that level.
//
// Per directed slot s = (v, w), with h = h[v][ell-1], |E_dir| = 2m,
// S = sum_s (1 - h[src(s)][ell-1]):
//   q(s) = (1 - h) / S                      conditioned approximate mass
//   r(s) = (1/|E_dir| - (1 - delta) q(s)) / delta
// so that (1 - delta) q + delta r = 1/|E_dir| for every slot.
template <class T>
struct BasicCorrectionWeights {
  T delta;
  T total_weight;  // S
  std::vector<T> q;
  std::vector<T> r;
};

// r is evaluated as (2m h - H) / (2m S delta) + (1 - h) / S with
// H = sum_s h[src(s)][ell-1]; algebraically identical to the defining formula
// but free of the cancellation in 1/(2m) - (1 - delta) q for small delta.
//
// Requires ht.levels() == ell_for(delta). Throws DistributionError if any
// weight is negative (beyond rounding for floating T), which means some
// h[v][ell-1] exceeds delta.
template <class T>
BasicCorrectionWeights<T> correction_weights(const Graph& g, const BasicHTable<T>& ht, const T& delta) {
  const int ell = ell_for(delta);
  if (ht.levels() != ell) {
    throw std::invalid_argument("h-table has " + std::to_string(ht.levels()) + " levels, delta needs " +
                                std::to_string(ell));
  }
  if (g.num_edges() == 0) throw std::invalid_argument("correction distribution over an empty edge set");
  const std::size_t slots = g.num_directed_edges();
  const T two_m(slots);
  T heavy_mass(0);
  const int level = attempt_bias_level(ell);
  for (std::size_t s = 0; s < slots; ++s) heavy_mass += ht.at(g.slot_source(s), level);

  BasicCorrectionWeights<T> out;
  out.delta = delta;
  out.total_weight = two_m - heavy_mass;
  out.q.resize(slots);
  out.r.resize(slots);
  const T denom = two_m * out.total_weight * delta;
  // Rounding allowance: only floating tables get one.
  const T tolerance = std::is_floating_point_v<T> ? T(1e-12) / two_m : T(0);
  for (std::size_t s = 0; s < slots; ++s) {
    const T& h = ht.at(g.slot_source(s), level);
    out.q[s] = (T(1) - h) / out.total_weight;
    T r = (two_m * h - heavy_mass) / denom + out.q[s];
    if (r < T(0)) {
      if (r < -tolerance) {
        throw DistributionError("negative correction weight at directed edge " + std::to_string(g.slot_source(s)) +
                                "->" + std::to_string(g.slot_target(s)) +
                                "; some h[v][ell-1] exceeds delta");
      }
      r = T(0);
    }
    out.r[s] = std::move(r);
  }
  return out;
}

// Correction distribution with a prefix-sum index over directed slots.
class CorrectionDistribution {
 public:
  explicit CorrectionDistribution(BasicCorrectionWeights<double> weights);

  double delta() const { return weights_.delta; }
  double total_weight() const { return weights_.total_weight; }
  std::span<const double> q() const { return weights_.q; }
  std::span<const double> r() const { return weights_.r; }

  std::size_t sample_slot(Rng& rng) const { return index_.sample(rng); }

  bool operator==(const CorrectionDistribution& other) const {
    return weights_.q == other.weights_.q && weights_.r == other.weights_.r &&
           weights_.delta == other.weights_.delta;
  }

 private:
  BasicCorrectionWeights<double> weights_;
  DiscreteDistribution index_;
};

// Full-graph build: classification with the true m, h-table with
// ell_for(delta) levels, then the weights. O(m * ell).
CorrectionDistribution build_correction(const Graph& g, const HTable& ht, double delta);
CorrectionDistribution build_correction(const Graph& g, double delta);

// n^-3 clamped into (0, 1/2].
double default_delta(std::size_t n);

// Mixture sampler: with probability 1 - delta it returns sample_edge(delta);
// otherwise it draws from the correction distribution, which is built on the
// first such draw and then reused. The marginal over directed edges is exactly
// uniform.
//
// Requires the true edge count: m_est must equal g.num_edges().
class ExactSampler {
 public:
  ExactSampler(const Graph& g, std::size_t m_est, std::optional<double> delta = std::nullopt,
               std::optional<std::uint64_t> max_attempts = std::nullopt);

  // oracle must be over the same graph with the same declared edge count.
  EdgeSample sample(QueryOracle& oracle) const;

  double delta() const { return config_.epsilon; }
  const SamplerConfig& config() const { return config_; }

  // Built at most once; safe to call from several threads.
  const CorrectionDistribution& correction() const;
  bool correction_built() const;

 private:
  struct LazyCorrection {
    std::once_flag once;
    std::unique_ptr<CorrectionDistribution> table;
  };

  const Graph* graph_;
  SamplerConfig config_;
  std::shared_ptr<LazyCorrection> lazy_;
};

// One-shot form. Builds the correction table only if its branch fires.
EdgeSample sample_exactly(QueryOracle& oracle, const Graph& g, std::optional<double> delta = std::nullopt);

}  // namespace edgesamp
