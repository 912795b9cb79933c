#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "edgesamp/classification.hpp"
#include "edgesamp/errors.hpp"
#include "edgesamp/graph.hpp"
#include "edgesamp/htable.hpp"
#include "edgesamp/rational.hpp"

namespace edgesamp {

// Probability mass per directed slot of a graph, plus the mass of "attempt
// failed". Raw distributions satisfy sum(mass) + fail_mass = 1; conditioned
// ones have fail_mass = 0 and sum(mass) = 1.
template <class T>
struct BasicEdgeDistribution {
  std::vector<T> mass;
  T fail_mass = T(0);
  bool conditioned = false;

  T total() const {
    T sum(0);
    for (const T& x : mass) sum += x;
    return sum;
  }

  // Success-conditioned copy.
  BasicEdgeDistribution condition() const {
    BasicEdgeDistribution out;
    const T success = total();
    if (success == T(0)) throw DistributionError("cannot condition on an event of probability zero");
    out.mass.reserve(mass.size());
    for (const T& x : mass) out.mass.push_back(x / success);
    out.conditioned = true;
    return out;
  }
};

using EdgeDistribution = BasicEdgeDistribution<double>;
using RationalEdgeDistribution = BasicEdgeDistribution<Rational>;

EdgeDistribution to_double(const RationalEdgeDistribution& d);

// Uniform over the 2m directed slots.
template <class T>
BasicEdgeDistribution<T> uniform_edge_distribution(const Graph& g) {
  BasicEdgeDistribution<T> out;
  out.mass.assign(g.num_directed_edges(), make_ratio<T>(1, g.num_directed_edges()));
  out.conditioned = true;
  return out;
}

struct EnumerationLimits {
  std::size_t max_vertices = 20'000;
  int max_levels = 64;
};

inline EnumerationLimits rational_enumeration_limits() { return {50, 32}; }

// Exact single-attempt output distribution of the walk sampler with walk-length
// cap ell, obtained by aggregating over every (k, u0, j, walk) outcome:
//
//   k = 1:  (u0, u1) with u0 light gets 1/(ell n theta) per neighbor slot.
//   k >= 2: reach(v) = P[u_1 = v] over light starts, pushed forward along
//           heavy vertices one uniform step at a time; the final step from
//           heavy u_{k-1} spreads reach/d over its neighbors.
//
// Works forward over walk prefixes and never touches the h recursion, so it
// can be checked against (1 - h[v][ell-1]) / (ell n theta).
template <class T>
BasicEdgeDistribution<T> exact_attempt_distribution(const Graph& g, const EdgeClassification& cls, int ell,
                                                    EnumerationLimits limits = {}) {
  const std::size_t n = g.num_vertices();
  if (ell < 1) throw std::invalid_argument("ell must be at least 1");
  if (n > limits.max_vertices || ell > limits.max_levels) {
    throw ResourceLimitError("enumeration limited to n <= " + std::to_string(limits.max_vertices) +
                             " and ell <= " + std::to_string(limits.max_levels) + " (got n = " +
                             std::to_string(n) + ", ell = " + std::to_string(ell) + ")");
  }
  const std::size_t theta = cls.theta;
  const T unit = T(1) / (T(ell) * T(n) * T(theta));  // 1/(ell n theta)

  BasicEdgeDistribution<T> out;
  out.mass.assign(g.num_directed_edges(), T(0));

  // k = 1 and the first step of every longer walk.
  std::vector<T> reach(n, T(0));
  for (Vertex u = 0; u < n; ++u) {
    if (cls.is_heavy[u]) continue;
    for (std::size_t s = g.slot_begin(u); s < g.slot_end(u); ++s) {
      out.mass[s] += unit;
      reach[g.slot_target(s)] += T(1) / (T(n) * T(theta));
    }
  }

  std::vector<T> next(n, T(0));
  for (int k = 2; k <= ell; ++k) {
    // reach holds P[u_{k-1} = v and the walk survived so far].
    for (Vertex v = 0; v < n; ++v) {
      if (!cls.is_heavy[v] || reach[v] == T(0)) continue;
      const T step = reach[v] / T(g.degree(v));
      const T final_mass = step / T(ell);
      for (std::size_t s = g.slot_begin(v); s < g.slot_end(v); ++s) {
        out.mass[s] += final_mass;
        next[g.slot_target(s)] += step;
      }
    }
    std::swap(reach, next);
    std::fill(next.begin(), next.end(), T(0));
  }

  out.fail_mass = T(1) - out.total();
  return out;
}

// Closed form (1 - h[src(s)][level]) / (ell n theta) per slot, with the rest as
// fail mass. level = attempt_bias_level(ell) is what the sampler realizes.
template <class T>
BasicEdgeDistribution<T> formula_attempt_distribution(const Graph& g, const EdgeClassification& cls,
                                                      const BasicHTable<T>& ht, int ell, int level) {
  if (level < 1 || level > ht.levels()) throw std::invalid_argument("h level out of range");
  const T unit = T(1) / (T(ell) * T(g.num_vertices()) * T(cls.theta));
  BasicEdgeDistribution<T> out;
  out.mass.reserve(g.num_directed_edges());
  for (std::size_t s = 0; s < g.num_directed_edges(); ++s) {
    out.mass.push_back((T(1) - ht.at(g.slot_source(s), level)) * unit);
  }
  out.fail_mass = T(1) - out.total();
  return out;
}

// ell n theta / sum_s (1 - h[src(s)][level]): mean of the geometric attempt
// count when the per-attempt success mass is the closed form above.
template <class T>
T formula_expected_attempts(const Graph& g, const EdgeClassification& cls, const BasicHTable<T>& ht, int ell,
                            int level) {
  T weight(0);
  for (std::size_t s = 0; s < g.num_directed_edges(); ++s) weight += T(1) - ht.at(g.slot_source(s), level);
  return T(ell) * T(g.num_vertices()) * T(cls.theta) / weight;
}

}  // namespace edgesamp
