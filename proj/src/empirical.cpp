#include "edgesamp/empirical.hpp"

#include <stdexcept>

#include "edgesamp/approx_sampler.hpp"
#include "edgesamp/exact_sampler.hpp"
#include "edgesamp/query_oracle.hpp"

namespace edgesamp {

std::vector<std::uint64_t> empirical_distribution(const SamplerSpec& spec, const Graph& g, std::uint64_t count,
                                                  std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("empirical distribution needs at least one sample");
  const std::size_t m_est = spec.m_est.value_or(g.num_edges());
  QueryOracle oracle(g, m_est, Rng(seed));
  std::vector<std::uint64_t> tally(g.num_edges(), 0);
  if (spec.kind == SamplerKind::Exact) {
    const ExactSampler sampler(g, m_est, spec.accuracy);
    for (std::uint64_t i = 0; i < count; ++i) ++tally[*g.edge_index(sampler.sample(oracle).edge)];
  } else {
    const SamplerConfig cfg = make_sampler_config(spec.accuracy.value_or(0.5), g.num_vertices(), m_est);
    for (std::uint64_t i = 0; i < count; ++i) ++tally[*g.edge_index(sample_edge(oracle, cfg).edge)];
  }
  return tally;
}

}  // namespace edgesamp
