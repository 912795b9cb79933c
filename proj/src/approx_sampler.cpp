#include "edgesamp/approx_sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "edgesamp/classification.hpp"
#include "edgesamp/errors.hpp"

namespace edgesamp {

int ell_of(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    throw std::invalid_argument("epsilon must lie in (0, 1/2], got " + std::to_string(epsilon));
  }
  // Smallest c with 2^-c <= epsilon; ldexp is exact so no log rounding.
  int c = 0;
  while (std::ldexp(1.0, -c) > epsilon) ++c;
  return c + 1;
}

std::uint64_t default_max_attempts(double epsilon, int ell, std::size_t n, std::size_t theta,
                                   std::size_t m_est) {
  const double expected = static_cast<double>(ell) * static_cast<double>(n) * static_cast<double>(theta) /
                          (2.0 * static_cast<double>(m_est) * (1.0 - epsilon));
  return 64 * static_cast<std::uint64_t>(std::ceil(expected));
}

SamplerConfig make_sampler_config(double epsilon, std::size_t n, std::size_t m_est,
                                  std::optional<std::uint64_t> max_attempts) {
  if (m_est == 0) throw std::invalid_argument("sampling needs a declared edge count of at least 1");
  SamplerConfig cfg;
  cfg.epsilon = epsilon;
  cfg.ell = ell_of(epsilon);
  cfg.theta = theta_of(m_est);
  cfg.max_attempts = max_attempts ? *max_attempts : default_max_attempts(epsilon, cfg.ell, n, cfg.theta, m_est);
  if (cfg.max_attempts == 0) throw std::invalid_argument("max_attempts must be positive");
  return cfg;
}

AttemptOutcome sampling_attempt(QueryOracle& oracle, int k, std::size_t theta) {
  if (k < 1) throw std::invalid_argument("walk length must be at least 1");
  const std::uint64_t start = oracle.counters().total();
  AttemptOutcome out;
  out.k_used = k;
  auto finish = [&](std::optional<DirectedEdge> result) {
    out.result = result;
    out.queries_used = oracle.counters().total() - start;
    return out;
  };

  const Vertex u0 = oracle.random_vertex();
  const std::size_t d0 = oracle.degree(u0);
  if (d0 > theta) return finish(std::nullopt);
  const auto j = static_cast<std::size_t>(oracle.rng().uniform_one_based(theta));
  if (j > d0) return finish(std::nullopt);
  const auto first = oracle.neighbor(u0, j);
  if (!first) return finish(std::nullopt);

  Vertex prev = u0;
  Vertex cur = *first;
  for (int i = 2; i <= k; ++i) {
    const std::size_t d = oracle.degree(cur);
    if (d <= theta) return finish(std::nullopt);
    const auto next = oracle.neighbor(cur, static_cast<std::size_t>(oracle.rng().uniform_one_based(d)));
    prev = cur;
    cur = *next;
  }
  return finish(DirectedEdge{prev, cur});
}

EdgeSample sample_edge(QueryOracle& oracle, const SamplerConfig& cfg) {
  if (oracle.declared_edges() == 0) throw std::invalid_argument("cannot sample an edge from an empty graph");
  const std::uint64_t start = oracle.counters().total();
  for (std::uint64_t attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    const int k = static_cast<int>(oracle.rng().uniform_one_based(static_cast<std::uint64_t>(cfg.ell)));
    const AttemptOutcome outcome = sampling_attempt(oracle, k, cfg.theta);
    if (outcome.result) {
      EdgeSample sample;
      sample.directed = *outcome.result;
      sample.edge = outcome.result->undirected();
      sample.attempts = attempt;
      sample.total_queries = oracle.counters().total() - start;
      sample.k_used = k;
      return sample;
    }
  }
  throw AttemptLimitError("no edge sampled within " + std::to_string(cfg.max_attempts) +
                          " attempts; is the declared edge count far above the true one?");
}

}  // namespace edgesamp
