#include "edgesamp/generators.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "edgesamp/errors.hpp"
#include "edgesamp/rng.hpp"

namespace edgesamp {

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  edges.reserve(leaves);
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<Vertex>(i)});
  return Graph(leaves + 1, edges);
}

Graph double_star(std::size_t leaves_per_hub) {
  const std::size_t k = leaves_per_hub;
  std::vector<Edge> edges;
  edges.reserve(2 * k + 1);
  edges.push_back({0, 1});
  for (std::size_t i = 0; i < k; ++i) edges.push_back({0, static_cast<Vertex>(2 + i)});
  for (std::size_t i = 0; i < k; ++i) edges.push_back({1, static_cast<Vertex>(2 + k + i)});
  return Graph(2 * k + 2, edges);
}

Graph lollipop(std::size_t clique_size, std::size_t path_len) {
  if (clique_size == 0) throw std::invalid_argument("lollipop needs a non-empty clique");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < clique_size; ++u) {
    for (std::size_t v = u + 1; v < clique_size; ++v) {
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  for (std::size_t i = 0; i < path_len; ++i) {
    const std::size_t from = clique_size - 1 + i;
    edges.push_back({static_cast<Vertex>(from), static_cast<Vertex>(from + 1)});
  }
  return Graph(clique_size + path_len, edges);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp: p must lie in [0, 1]");
  std::vector<Edge> edges;
  if (p > 0.0 && n > 1) {
    edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2 * 1.1) + 16);
  }
  if (p == 1.0) {
    for (std::size_t v = 1; v < n; ++v) {
      for (std::size_t w = 0; w < v; ++w) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
    }
  } else if (p > 0.0) {
    // Batagelj-Brandes skipping over the pairs (w, v), w < v.
    Rng rng(seed);
    const double log_q = std::log1p(-p);
    std::int64_t v = 1;
    std::int64_t w = -1;
    const auto nn = static_cast<std::int64_t>(n);
    while (v < nn) {
      const double r = rng.uniform01();
      w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
      while (w >= v && v < nn) {
        w -= v;
        ++v;
      }
      if (v < nn) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
    }
  }
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  edges.reserve(a * b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
    }
  }
  return Graph(a + b, edges);
}

GeneratorSpec parse_generator_spec(std::string_view text, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.seed = seed;
  const auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (spec.name.empty()) throw ParseError("generator spec has no name");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string token(rest.substr(0, comma));
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) throw ParseError("bad generator parameter '" + token + "'");
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return spec;
}

namespace {

std::size_t count_param(const GeneratorSpec& spec, std::size_t index) {
  const double x = spec.params[index];
  if (!(x >= 0) || std::floor(x) != x) {
    throw std::invalid_argument(spec.name + ": parameter " + std::to_string(index + 1) +
                                " must be a non-negative integer");
  }
  return static_cast<std::size_t>(x);
}

void expect_arity(const GeneratorSpec& spec, std::size_t arity) {
  if (spec.params.size() != arity) {
    throw std::invalid_argument(spec.name + " takes " + std::to_string(arity) + " parameter(s)");
  }
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
  if (spec.name == "star") {
    expect_arity(spec, 1);
    return star(count_param(spec, 0));
  }
  if (spec.name == "double_star") {
    expect_arity(spec, 1);
    return double_star(count_param(spec, 0));
  }
  if (spec.name == "lollipop") {
    expect_arity(spec, 2);
    return lollipop(count_param(spec, 0), count_param(spec, 1));
  }
  if (spec.name == "gnp") {
    expect_arity(spec, 2);
    return gnp(count_param(spec, 0), spec.params[1], spec.seed);
  }
  if (spec.name == "complete_bipartite") {
    expect_arity(spec, 2);
    return complete_bipartite(count_param(spec, 0), count_param(spec, 1));
  }
  throw std::invalid_argument("unknown generator '" + spec.name + "'");
}

}  // namespace edgesamp
