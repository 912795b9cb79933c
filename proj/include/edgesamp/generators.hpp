#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "edgesamp/graph.hpp"

namespace edgesamp {

// star(leaves): center 0, leaves 1..leaves.
Graph star(std::size_t leaves);

// double_star(k): adjacent hubs 0 and 1, each with k private leaves.
// n = 2k + 2, m = 2k + 1.
Graph double_star(std::size_t leaves_per_hub);

// lollipop(c, L): clique on 0..c-1 with a path of L extra vertices hanging off
// vertex c-1.
Graph lollipop(std::size_t clique_size, std::size_t path_len);

// Erdos-Renyi G(n, p), generated in O(n + m) by geometric skipping.
// Deterministic for a fixed seed. Throws std::invalid_argument unless p in [0, 1].
Graph gnp(std::size_t n, double p, std::uint64_t seed);

// K_{a,b}: left side 0..a-1, right side a..a+b-1.
Graph complete_bipartite(std::size_t a, std::size_t b);

// Textual generator description, e.g. "star:4", "gnp:100,0.1", "lollipop:5,3".
struct GeneratorSpec {
  std::string name;
  std::vector<double> params;
  std::uint64_t seed = 0;
};

// Throws ParseError on malformed text.
GeneratorSpec parse_generator_spec(std::string_view text, std::uint64_t seed = 0);

// Throws std::invalid_argument on unknown names or bad parameters.
Graph generate(const GeneratorSpec& spec);

}  // namespace edgesamp
