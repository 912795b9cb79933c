#include "edgesamp/query_oracle.hpp"

#include <string>

namespace edgesamp {

QueryOracle::QueryOracle(const Graph& g, std::size_t m_est, Rng rng)
    : graph_(&g), m_est_(m_est), rng_(std::move(rng)) {
  if (g.num_vertices() == 0) throw std::invalid_argument("query oracle over an empty vertex set");
  if (m_est == 0 && g.num_edges() > 0) {
    throw std::invalid_argument("declared edge count 0 for a graph with edges");
  }
}

}  // namespace edgesamp
