#include "edgesamp/classification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgesamp {

std::size_t theta_of(std::size_t m_est) {
  const std::size_t target = 2 * m_est;
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(target)));
  while (r * r > target) --r;
  while ((r + 1) * (r + 1) <= target) ++r;
  return r * r == target ? r : r + 1;
}

std::size_t EdgeClassification::heavy_count() const {
  return static_cast<std::size_t>(std::count(is_heavy.begin(), is_heavy.end(), true));
}

EdgeClassification classify(const Graph& g, std::size_t m_est) {
  if (m_est == 0 && g.num_edges() > 0) {
    throw std::invalid_argument("declared edge count 0 for a graph with edges");
  }
  const std::size_t n = g.num_vertices();
  EdgeClassification cls;
  cls.m_est = m_est;
  cls.theta = theta_of(m_est);
  cls.is_heavy.resize(n);
  for (Vertex v = 0; v < n; ++v) cls.is_heavy[v] = g.degree(v) > cls.theta;
  cls.heavy_degree.assign(n, 0);
  cls.heavy_neighbors.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (cls.is_heavy[w]) cls.heavy_neighbors[v].push_back(w);
    }
    cls.heavy_degree[v] = cls.heavy_neighbors[v].size();
  }
  return cls;
}

}  // namespace edgesamp
