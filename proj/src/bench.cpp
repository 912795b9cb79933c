#include "edgesamp/bench.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "edgesamp/approx_sampler.hpp"
#include "edgesamp/classification.hpp"
#include "edgesamp/enumeration.hpp"
#include "edgesamp/errors.hpp"
#include "edgesamp/generators.hpp"
#include "edgesamp/htable.hpp"
#include "edgesamp/query_oracle.hpp"
#include "edgesamp/stats.hpp"

namespace edgesamp {

std::string BenchFamily::id(std::size_t n) const {
  std::string out = name;
  if (name == "gnp") out += "_d" + std::to_string(static_cast<long long>(std::llround(parameter)));
  return out + "_n" + std::to_string(n);
}

BenchFamily parse_bench_family(std::string_view text) {
  const GeneratorSpec spec = parse_generator_spec(text);
  BenchFamily family{spec.name, 0.0};
  if (spec.name == "gnp") {
    if (spec.params.size() != 1 || !(spec.params[0] > 0)) throw ParseError("gnp family needs a positive average degree");
    family.parameter = spec.params[0];
  } else if (spec.name == "double_star" || spec.name == "star") {
    if (!spec.params.empty()) throw ParseError(spec.name + " family takes no parameters");
  } else {
    throw ParseError("unknown bench family '" + spec.name + "'");
  }
  return family;
}

Graph make_family_graph(const BenchFamily& family, std::size_t n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("bench sizes must be at least 4");
  if (family.name == "gnp") return gnp(n, std::min(1.0, family.parameter / static_cast<double>(n - 1)), seed);
  if (family.name == "double_star") return double_star((n - 2) / 2);
  if (family.name == "star") return star(n - 1);
  throw std::invalid_argument("unknown bench family '" + family.name + "'");
}

BenchRecord bench_graph(const Graph& g, std::string graph_id, double epsilon, std::size_t samples,
                        std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("bench needs at least one sample");
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  const SamplerConfig cfg = make_sampler_config(epsilon, n, m);

  BenchRecord rec;
  rec.graph_id = std::move(graph_id);
  rec.n = n;
  rec.m = m;
  rec.epsilon = epsilon;
  rec.samples = samples;
  const double lnt = static_cast<double>(cfg.ell) * static_cast<double>(n) * static_cast<double>(cfg.theta);
  rec.predicted_attempts = lnt / ((1.0 - epsilon) * 2.0 * static_cast<double>(m));

  const auto cls = classify(g, m);
  const auto ht = compute_h<double>(g, cls, cfg.ell);
  rec.expected_attempts = formula_expected_attempts(g, cls, ht, cfg.ell, attempt_bias_level(cfg.ell));

  QueryOracle oracle(g, m, Rng(seed));
  RunningStats attempts;
  RunningStats queries;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < samples; ++i) {
    const EdgeSample s = sample_edge(oracle, cfg);
    attempts.add(static_cast<double>(s.attempts));
    queries.add(static_cast<double>(s.total_queries));
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  rec.mean_attempts = attempts.mean();
  rec.attempts_stderr = attempts.standard_error();
  rec.mean_queries = queries.mean();
  const double scale = static_cast<double>(n) / std::sqrt(static_cast<double>(m)) * std::log2(1.0 / epsilon);
  rec.complexity_ratio = rec.mean_queries / scale;
  rec.seconds_per_sample = elapsed.count() / static_cast<double>(samples);
  return rec;
}

std::vector<BenchRecord> bench_scaling(const BenchFamily& family, std::span<const std::size_t> sizes,
                                       double epsilon, std::size_t samples, std::uint64_t seed) {
  std::vector<BenchRecord> out;
  const Rng master(seed);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    Rng stream = master.split(i);
    const Graph g = make_family_graph(family, sizes[i], stream());
    out.push_back(bench_graph(g, family.id(sizes[i]), epsilon, samples, stream()));
  }
  return out;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "graph_id,n,m,epsilon,samples,mean_queries,mean_attempts,attempts_stderr,predicted_attempts,"
         "expected_attempts,complexity_ratio,seconds_per_sample\n";
  for (const BenchRecord& r : records) {
    out << r.graph_id << ',' << r.n << ',' << r.m << ',' << r.epsilon << ',' << r.samples << ',' << r.mean_queries
        << ',' << r.mean_attempts << ',' << r.attempts_stderr << ',' << r.predicted_attempts << ','
        << r.expected_attempts << ',' << r.complexity_ratio << ',' << r.seconds_per_sample << '\n';
  }
}

}  // namespace edgesamp
