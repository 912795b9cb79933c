#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

namespace edgesamp {

using Vertex = std::uint32_t;

// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Ordered pair (source, target). Every undirected edge {u, v} appears as the
// two directed edges (u, v) and (v, u).
struct DirectedEdge {
  Vertex source = 0;
  Vertex target = 0;
  auto operator<=>(const DirectedEdge&) const = default;

  Edge undirected() const {
    return source < target ? Edge{source, target} : Edge{target, source};
  }
};

// Immutable simple undirected graph.
//
// Adjacency lists keep the order in which edges were supplied, so "the j-th
// neighbor of v" is fixed for the lifetime of the graph. Storage is CSR:
// directed edge (v, neighbors(v)[j]) has slot id offset(v) + j in [0, 2m).
class Graph {
 public:
  Graph() = default;

  // Validates the edge list: endpoints < n, no self-loops, no duplicates.
  // Endpoint order inside an Edge is not significant. Throws ValidationError.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_directed_edges() const { return targets_.size(); }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], degree(v)};
  }

  bool has_edge(Vertex u, Vertex v) const;

  // Directed-edge slots.
  std::size_t slot(Vertex v, std::size_t j) const { return offsets_[v] + j; }
  std::size_t slot_begin(Vertex v) const { return offsets_[v]; }
  std::size_t slot_end(Vertex v) const { return offsets_[v + 1]; }
  Vertex slot_source(std::size_t s) const { return sources_[s]; }
  Vertex slot_target(std::size_t s) const { return targets_[s]; }
  DirectedEdge directed_edge(std::size_t s) const { return {sources_[s], targets_[s]}; }

  // Undirected edge id of a directed slot; ids index edges().
  std::size_t edge_id(std::size_t s) const { return edge_of_slot_[s]; }

  // Undirected edges, in canonical order (by smaller endpoint, then by the
  // smaller endpoint's adjacency order), each with u < v.
  std::span<const Edge> edges() const { return edges_; }

  // Id of an undirected edge, if present.
  std::optional<std::size_t> edge_index(Edge e) const;

  // Slot of a directed edge; the edge must exist.
  std::size_t slot_of(DirectedEdge d) const;

  bool is_vertex(Vertex v) const { return v < num_vertices(); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Vertex> sources_;
  std::vector<std::size_t> edge_of_slot_;
  std::vector<Edge> edges_;
  // Per edge id: slot of (u, v) and slot of (v, u).
  std::vector<std::array<std::size_t, 2>> slots_of_edge_;
  std::unordered_map<std::uint64_t, std::size_t> edge_ids_;
};

// Checks the structural invariants (symmetry, no loops or duplicates, degree
// sum = 2m). Returns false on the first violation.
bool check_invariants(const Graph& g);

}  // namespace edgesamp
