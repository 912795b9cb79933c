#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edgesamp/graph.hpp"

namespace edgesamp {

enum class SamplerKind { Approximate, Exact };

struct SamplerSpec {
  SamplerKind kind = SamplerKind::Approximate;
  // epsilon for the approximate sampler, delta for the exact one. Unset means
  // n^-3 (exact) or 1/2 (approximate).
  std::optional<double> accuracy;
  // Declared edge count; defaults to the true m.
  std::optional<std::size_t> m_est;
};

// Draws count samples with one oracle seeded from seed and tallies them per
// undirected edge id. Deterministic for a fixed seed.
std::vector<std::uint64_t> empirical_distribution(const SamplerSpec& spec, const Graph& g, std::uint64_t count,
                                                  std::uint64_t seed);

}  // namespace edgesamp
