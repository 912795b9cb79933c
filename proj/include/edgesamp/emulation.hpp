#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "edgesamp/approx_sampler.hpp"
#include "edgesamp/exact_sampler.hpp"
#include "edgesamp/graph.hpp"
#include "edgesamp/query_oracle.hpp"

namespace edgesamp {

enum class EdgeSourceKind {
  TrueUniform,  // reads the graph directly; tests only
  Approximate,  // sample_edge(epsilon)
  Exact,        // ExactSampler(delta)
};

struct EdgeSourceSpec {
  EdgeSourceKind kind = EdgeSourceKind::Approximate;
  // epsilon or delta; unset picks 1/n^2 (approximate) or n^-3 (exact).
  std::optional<double> accuracy;
};

// Extended-model oracle: the standard queries of a base oracle plus a
// random-edge query emulated by the configured source. Base queries are
// forwarded, so the base counters keep counting everything the edge source
// spends as well.
class ExtendedOracle {
 public:
  Vertex random_vertex() { return base_->random_vertex(); }
  std::size_t degree(Vertex v) { return base_->degree(v); }
  std::optional<Vertex> neighbor(Vertex v, std::size_t j) { return base_->neighbor(v, j); }
  bool pair(Vertex u, Vertex v) { return base_->pair(u, v); }

  Edge random_edge();

  std::uint64_t random_edge_count() const { return random_edges_; }
  QueryOracle& base() { return *base_; }
  const QueryOracle& base() const { return *base_; }
  EdgeSourceKind source() const { return kind_; }

 private:
  friend ExtendedOracle make_extended(QueryOracle& base, const EdgeSourceSpec& spec, const Graph* full_access);

  ExtendedOracle(QueryOracle& base, EdgeSourceKind kind) : base_(&base), kind_(kind) {}

  QueryOracle* base_;
  EdgeSourceKind kind_;
  const Graph* graph_ = nullptr;
  SamplerConfig approx_;
  std::shared_ptr<const ExactSampler> exact_;
  std::uint64_t random_edges_ = 0;
};

// full_access grants the edge source read access to the whole graph. It is
// required for TrueUniform and for Exact (whose rare correction branch reads
// the full graph); both throw std::invalid_argument without it.
ExtendedOracle make_extended(QueryOracle& base, const EdgeSourceSpec& spec, const Graph* full_access = nullptr);

}  // namespace edgesamp
