#pragma once

#include <cstdint>
#include <optional>

#include "edgesamp/graph.hpp"
#include "edgesamp/query_oracle.hpp"

namespace edgesamp {

// Walk-length cap ceil(log2(1/epsilon)) + 1, i.e. one more than the smallest c
// with 2^-c <= epsilon. Throws std::invalid_argument unless 0 < epsilon <= 1/2.
int ell_of(double epsilon);

struct SamplerConfig {
  double epsilon = 0.5;
  int ell = 2;
  std::size_t theta = 0;
  std::uint64_t max_attempts = 0;
};

// 64 * ceil(ell * n * theta / (2 * m_est * (1 - epsilon))).
std::uint64_t default_max_attempts(double epsilon, int ell, std::size_t n, std::size_t theta,
                                   std::size_t m_est);

// Builds a config for a graph with n vertices and declared edge count m_est.
SamplerConfig make_sampler_config(double epsilon, std::size_t n, std::size_t m_est,
                                  std::optional<std::uint64_t> max_attempts = std::nullopt);

struct AttemptOutcome {
  std::optional<DirectedEdge> result;
  int k_used = 0;
  std::uint64_t queries_used = 0;
};

// One constrained walk of length k. Starts at a uniform vertex u0, fails if u0
// is heavy, picks j uniform in [1, theta] and moves to the j-th neighbor
// (failing if there is none), then keeps stepping to uniform random neighbors
// while the current vertex is heavy. Returns the last directed edge
// (u_{k-1}, u_k). Issues at most 2k + 1 queries.
AttemptOutcome sampling_attempt(QueryOracle& oracle, int k, std::size_t theta);

struct EdgeSample {
  Edge edge;
  DirectedEdge directed;
  std::uint64_t attempts = 0;
  std::uint64_t total_queries = 0;
  int k_used = 0;
  // Set by the exact sampler when the draw came from the correction table.
  bool corrected = false;
};

// Repeats {k uniform in [1, ell]; sampling_attempt(k)} until an attempt
// succeeds. The result is pointwise epsilon-close to uniform over directed
// edges when oracle.declared_edges() >= m. Throws AttemptLimitError after
// cfg.max_attempts failures.
EdgeSample sample_edge(QueryOracle& oracle, const SamplerConfig& cfg);

}  // namespace edgesamp
