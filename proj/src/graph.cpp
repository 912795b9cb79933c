#include "edgesamp/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "edgesamp/errors.hpp"

namespace edgesamp {

namespace {

std::uint64_t edge_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  if (n > std::size_t{0xffffffffu}) throw ValidationError("vertex count exceeds 32-bit ids");
  std::vector<std::size_t> degree(n, 0);
  std::unordered_map<std::uint64_t, bool> seen;
  seen.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ValidationError("vertex id out of range in edge " + std::to_string(e.u) + " " +
                            std::to_string(e.v) + " (n = " + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u));
    if (!seen.emplace(edge_key(e.u, e.v), true).second) {
      throw ValidationError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    ++degree[e.u];
    ++degree[e.v];
  }

  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  targets_.resize(offsets_[n]);
  sources_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    sources_[fill[e.u]] = e.u;
    targets_[fill[e.u]++] = e.v;
    sources_[fill[e.v]] = e.v;
    targets_[fill[e.v]++] = e.u;
  }

  // Canonical undirected ids: walk v ascending, assign ids to slots whose
  // target is larger, then resolve the reverse slots by sorted lookup.
  edge_of_slot_.assign(targets_.size(), 0);
  edges_.reserve(edges.size());
  slots_of_edge_.reserve(edges.size());
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> incoming(n);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t s = offsets_[v]; s < offsets_[v + 1]; ++s) {
      const Vertex w = targets_[s];
      if (w > v) {
        edge_of_slot_[s] = edges_.size();
        incoming[w].emplace_back(v, edges_.size());
        edges_.push_back({v, w});
        slots_of_edge_.push_back({s, 0});
      }
    }
  }
  for (Vertex w = 0; w < n; ++w) {
    auto& in = incoming[w];
    std::sort(in.begin(), in.end());
    for (std::size_t s = offsets_[w]; s < offsets_[w + 1]; ++s) {
      const Vertex v = targets_[s];
      if (v < w) {
        auto it = std::lower_bound(in.begin(), in.end(), std::make_pair(v, std::size_t{0}));
        edge_of_slot_[s] = it->second;
        slots_of_edge_[it->second][1] = s;
      }
    }
    in.clear();
    in.shrink_to_fit();
  }
  seen.clear();
  edge_ids_.reserve(edges_.size() * 2);
  for (std::size_t id = 0; id < edges_.size(); ++id) edge_ids_.emplace(edge_key(edges_[id].u, edges_[id].v), id);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  return edge_ids_.contains(edge_key(u, v));
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  auto it = edge_ids_.find(edge_key(e.u, e.v));
  if (it == edge_ids_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::slot_of(DirectedEdge d) const {
  const auto id = edge_index(d.undirected());
  if (!id) throw std::out_of_range("no such edge " + std::to_string(d.source) + "->" + std::to_string(d.target));
  return d.source < d.target ? slots_of_edge_[*id][0] : slots_of_edge_[*id][1];
}

bool check_invariants(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nbrs = g.neighbors(v);
    degree_sum += nbrs.size();
    std::vector<Vertex> sorted(nbrs.begin(), nbrs.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (Vertex w : nbrs) {
      if (w == v || !g.is_vertex(w)) return false;
      auto back = g.neighbors(w);
      if (std::find(back.begin(), back.end(), v) == back.end()) return false;
    }
  }
  if (degree_sum != 2 * g.num_edges()) return false;
  for (std::size_t s = 0; s < g.num_directed_edges(); ++s) {
    if (g.edges()[g.edge_id(s)] != g.directed_edge(s).undirected()) return false;
  }
  return true;
}

}  // namespace edgesamp
