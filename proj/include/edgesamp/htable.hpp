#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "edgesamp/classification.hpp"
#include "edgesamp/errors.hpp"
#include "edgesamp/graph.hpp"
#include "edgesamp/rational.hpp"

namespace edgesamp {

// h[v][i] for levels i = 1..ell: the probability that an i-step uniform random
// walk from heavy v visits only heavy vertices. Zero for light v.
//
// Stored level-major so that one DP phase reads a contiguous row.
template <class T>
class BasicHTable {
 public:
  BasicHTable() = default;
  BasicHTable(std::size_t n, int ell) : n_(n), ell_(ell), values_(n * static_cast<std::size_t>(ell), T(0)) {}

  int levels() const { return ell_; }
  std::size_t num_vertices() const { return n_; }

  const T& at(Vertex v, int level) const { return values_[index(v, level)]; }
  T& at(Vertex v, int level) { return values_[index(v, level)]; }

  std::span<const T> level(int level) const {
    return {values_.data() + index(0, level), n_};
  }

  bool operator==(const BasicHTable&) const = default;

 private:
  std::size_t index(Vertex v, int level) const {
    return static_cast<std::size_t>(level - 1) * n_ + v;
  }

  std::size_t n_ = 0;
  int ell_ = 0;
  std::vector<T> values_;
};

using HTable = BasicHTable<double>;

// h level that biases the walk sampler with walk-length cap ell: a heavy-sourced
// directed edge (v, w) is returned with probability (1 - h[v][ell-1]) relative
// to a light one.
constexpr int attempt_bias_level(int ell) { return ell - 1; }
using RationalHTable = BasicHTable<Rational>;

// Level-by-level DP, O(ell * m):
//   h[v][1] = d_H(v) / d(v)
//   h[v][i] = (1 / d(v)) * sum_{w in N_H(v)} h[w][i-1]
// which equals h[v][1] * (sum / d_H(v)) and is 0 when d_H(v) = 0.
template <class T>
BasicHTable<T> compute_h(const Graph& g, const EdgeClassification& cls, int ell) {
  if (ell < 1) throw std::invalid_argument("h-table needs at least one level");
  const std::size_t n = g.num_vertices();
  BasicHTable<T> table(n, ell);
  for (Vertex v = 0; v < n; ++v) {
    if (cls.is_heavy[v]) table.at(v, 1) = make_ratio<T>(cls.heavy_degree[v], g.degree(v));
  }
  for (int i = 2; i <= ell; ++i) {
    for (Vertex v = 0; v < n; ++v) {
      if (!cls.is_heavy[v] || cls.heavy_degree[v] == 0) continue;
      T sum(0);
      for (Vertex w : cls.heavy_neighbors[v]) sum += table.at(w, i - 1);
      table.at(v, i) = sum / T(g.degree(v));
    }
  }
  return table;
}

// Independent check of compute_h: enumerates every i-step neighbor sequence
// from v, pruning at the first light vertex, and sums the path probabilities
// prod 1/d(u_t). Throws ResourceLimitError once more than max_paths partial
// paths have been expanded.
template <class T>
T h_walk_oracle(const Graph& g, const EdgeClassification& cls, Vertex v, int i,
                std::size_t max_paths = 10'000'000) {
  if (i < 1) throw std::invalid_argument("walk length must be at least 1");
  if (!cls.is_heavy[v]) return T(0);
  std::size_t expanded = 0;
  T total(0);
  // Explicit stack of (vertex, steps taken, path probability).
  struct Frame {
    Vertex at;
    int steps;
    T prob;
  };
  std::vector<Frame> stack;
  stack.push_back({v, 0, T(1)});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.steps == i) {
      total += f.prob;
      continue;
    }
    if (++expanded > max_paths) {
      throw ResourceLimitError("walk enumeration exceeded " + std::to_string(max_paths) + " paths");
    }
    const T step = f.prob / T(g.degree(f.at));
    for (Vertex w : g.neighbors(f.at)) {
      if (cls.is_heavy[w]) stack.push_back({w, f.steps + 1, step});
    }
  }
  return total;
}

struct HBoundReport {
  std::size_t heavy_vertices = 0;
  // Heavy vertices with h[v][1] > 1/2.
  std::size_t first_level_violations = 0;
  // (vertex, level) entries with h[v][i] > 2^-i.
  std::size_t level_violations = 0;
  // max over heavy v and levels of h[v][i] * 2^i.
  double worst_scaled = 0;

  bool ok() const { return first_level_violations == 0 && level_violations == 0; }
};

// slack is an absolute tolerance for floating tables; pass 0 for exact ones.
HBoundReport check_h_bounds(const HTable& table, const EdgeClassification& cls, double slack = 1e-12);
HBoundReport check_h_bounds(const RationalHTable& table, const EdgeClassification& cls);

// max_v h[v][level].
double max_h(const HTable& table, int level);

}  // namespace edgesamp
