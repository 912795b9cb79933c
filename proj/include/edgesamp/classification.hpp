#pragma once

#include <cstddef>
#include <vector>

#include "edgesamp/graph.hpp"

namespace edgesamp {

// ceil(sqrt(2 * m_est)), computed in integer arithmetic.
std::size_t theta_of(std::size_t m_est);

// Light/heavy split of the vertices for a declared edge count. A vertex is
// heavy when its degree exceeds theta; a directed edge inherits the class of
// its source.
struct EdgeClassification {
  std::size_t m_est = 0;
  std::size_t theta = 0;
  std::vector<bool> is_heavy;
  std::vector<std::size_t> heavy_degree;                // d_H(v)
  std::vector<std::vector<Vertex>> heavy_neighbors;     // adjacency order kept

  std::size_t heavy_count() const;
};

// Throws std::invalid_argument when m_est = 0 and the graph has edges.
EdgeClassification classify(const Graph& g, std::size_t m_est);

}  // namespace edgesamp
