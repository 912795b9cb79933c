#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "edgesamp/graph.hpp"
#include "edgesamp/rng.hpp"

namespace edgesamp {

struct QueryCounters {
  std::uint64_t random_vertex = 0;
  std::uint64_t degree = 0;
  std::uint64_t neighbor = 0;
  std::uint64_t pair = 0;

  std::uint64_t total() const { return random_vertex + degree + neighbor + pair; }
  bool operator==(const QueryCounters&) const = default;
};

// Standard-model access to a graph: uniform random vertex, degree, j-th
// neighbor and pair queries, each counted. The vertex count n is public
// knowledge in this model; the edge count is only known through the declared
// value m_est (exact or an upper bound).
//
// Not thread-safe. Use one oracle per worker over a shared Graph.
class QueryOracle {
 public:
  QueryOracle(const Graph& g, std::size_t m_est, Rng rng);

  Vertex random_vertex() {
    ++counters_.random_vertex;
    return static_cast<Vertex>(rng_.uniform_index(graph_->num_vertices()));
  }

  std::size_t degree(Vertex v) {
    check(v);
    ++counters_.degree;
    return graph_->degree(v);
  }

  // j is 1-based. Empty when j > degree(v).
  std::optional<Vertex> neighbor(Vertex v, std::size_t j) {
    check(v);
    if (j == 0) throw std::out_of_range("neighbor index is 1-based");
    ++counters_.neighbor;
    if (j > graph_->degree(v)) return std::nullopt;
    return graph_->neighbors(v)[j - 1];
  }

  bool pair(Vertex u, Vertex v) {
    check(u);
    check(v);
    ++counters_.pair;
    return graph_->has_edge(u, v);
  }

  std::size_t num_vertices() const { return graph_->num_vertices(); }
  std::size_t declared_edges() const { return m_est_; }
  const QueryCounters& counters() const { return counters_; }
  Rng& rng() { return rng_; }

 private:
  void check(Vertex v) const {
    if (!graph_->is_vertex(v)) throw std::out_of_range("invalid vertex id " + std::to_string(v));
  }

  const Graph* graph_;
  std::size_t m_est_;
  Rng rng_;
  QueryCounters counters_;
};

}  // namespace edgesamp
