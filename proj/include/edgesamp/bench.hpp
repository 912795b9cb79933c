#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgesamp/graph.hpp"

namespace edgesamp {

// Graph family indexed by vertex count:
//   "gnp:<avg_degree>"  G(n, avg_degree / (n - 1))
//   "double_star"       double_star((n - 2) / 2)
//   "star"              star(n - 1)
struct BenchFamily {
  std::string name;
  double parameter = 0;

  std::string id(std::size_t n) const;
};

BenchFamily parse_bench_family(std::string_view text);
Graph make_family_graph(const BenchFamily& family, std::size_t n, std::uint64_t seed);

struct BenchRecord {
  std::string graph_id;
  std::size_t n = 0;
  std::size_t m = 0;
  double epsilon = 0;
  std::size_t samples = 0;
  double mean_queries = 0;
  double mean_attempts = 0;
  double attempts_stderr = 0;
  // ell n theta / ((1 - epsilon) 2m): the bound on expected attempts.
  double predicted_attempts = 0;
  // ell n theta / sum_s (1 - h[src(s)][ell-1]): the exact expectation.
  double expected_attempts = 0;
  // mean_queries / (n / sqrt(m) * log2(1/epsilon)).
  double complexity_ratio = 0;
  double seconds_per_sample = 0;
};

// Runs `samples` approximate samples per size and records query and attempt
// statistics.
std::vector<BenchRecord> bench_scaling(const BenchFamily& family, std::span<const std::size_t> sizes,
                                       double epsilon, std::size_t samples, std::uint64_t seed);

BenchRecord bench_graph(const Graph& g, std::string graph_id, double epsilon, std::size_t samples,
                        std::uint64_t seed);

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace edgesamp
