// edgesamp: command-line front end for the edge samplers and their checks.
//
// Exit codes: 0 success, 1 usage or runtime error, 2 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "edgesamp/approx_sampler.hpp"
#include "edgesamp/bench.hpp"
#include "edgesamp/classification.hpp"
#include "edgesamp/coupling.hpp"
#include "edgesamp/distance.hpp"
#include "edgesamp/enumeration.hpp"
#include "edgesamp/exact_sampler.hpp"
#include "edgesamp/generators.hpp"
#include "edgesamp/graph_io.hpp"
#include "edgesamp/htable.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace edgesamp;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerifyFailed = 2;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

struct GraphSource {
  std::string path;
  std::string gen;

  Graph load(std::uint64_t seed) const {
    if (!gen.empty()) return generate(parse_generator_spec(gen, seed));
    return load_graph(path);
  }
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
  auto* file = cmd->add_option("--graph", src.path, "Edge-list file");
  auto* gen = cmd->add_option("--gen", src.gen, "Generator spec instead of a file, e.g. gnp:100,0.1");
  file->excludes(gen);
  gen->excludes(file);
}

json graph_json(const Graph& g, std::size_t theta) {
  return {{"n", g.num_vertices()}, {"m", g.num_edges()}, {"theta", theta}};
}

// Writes to --out or stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// Flat records as CSV: header from the first object's keys.
void write_csv(std::ostream& out, const json& rows) {
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [key, _] : rows.front().items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [_, value] : row.items()) {
      out << (first ? "" : ",");
      if (value.is_string()) {
        out << value.get<std::string>();
      } else {
        out << value.dump();
      }
      first = false;
    }
    out << '\n';
  }
}

void emit(const GlobalOptions& opts, const json& graph, const json& config, const json& results) {
  Output out(opts.out);
  if (opts.format == "csv") {
    write_csv(out.stream(), results);
  } else {
    const json report = {{"graph", graph}, {"config", config}, {"results", results}};
    out.stream() << report.dump(2) << '\n';
  }
}

json sample_row(const EdgeSample& s) {
  return {{"u", s.edge.u},
          {"v", s.edge.v},
          {"source", s.directed.source},
          {"target", s.directed.target},
          {"attempts", s.attempts},
          {"queries", s.total_queries},
          {"k", s.k_used},
          {"corrected", s.corrected}};
}

int run_generate(const GlobalOptions& opts, const std::string& spec) {
  const Graph g = generate(parse_generator_spec(spec, opts.seed));
  Output out(opts.out);
  write_graph(out.stream(), g);
  return kExitOk;
}

struct SampleArgs {
  GraphSource graph;
  double accuracy = 0.5;
  bool accuracy_set = false;
  std::uint64_t count = 1;
  std::optional<std::size_t> m_est;
  std::optional<std::uint64_t> max_attempts;
  std::string dump_correction;
};

int run_sample(const GlobalOptions& opts, const SampleArgs& args) {
  const Graph g = args.graph.load(opts.seed);
  const std::size_t m_est = args.m_est.value_or(g.num_edges());
  const SamplerConfig cfg = make_sampler_config(args.accuracy, g.num_vertices(), m_est, args.max_attempts);
  QueryOracle oracle(g, m_est, Rng(opts.seed));
  json results = json::array();
  for (std::uint64_t i = 0; i < args.count; ++i) results.push_back(sample_row(sample_edge(oracle, cfg)));
  const json config = {{"sampler", "approximate"}, {"epsilon", cfg.epsilon},   {"ell", cfg.ell},
                       {"m_est", m_est},           {"max_attempts", cfg.max_attempts}, {"count", args.count},
                       {"seed", opts.seed}};
  emit(opts, graph_json(g, cfg.theta), config, results);
  return kExitOk;
}

void dump_correction(const std::string& path, const Graph& g, const CorrectionDistribution& corr) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "'");
  out.precision(17);
  out << "v,w,q,r\n";
  for (std::size_t s = 0; s < g.num_directed_edges(); ++s) {
    out << g.slot_source(s) << ',' << g.slot_target(s) << ',' << corr.q()[s] << ',' << corr.r()[s] << '\n';
  }
}

int run_exact_sample(const GlobalOptions& opts, const SampleArgs& args) {
  const Graph g = args.graph.load(opts.seed);
  const std::size_t m_est = args.m_est.value_or(g.num_edges());
  const ExactSampler sampler(g, m_est, args.accuracy_set ? std::optional<double>(args.accuracy) : std::nullopt,
                             args.max_attempts);
  QueryOracle oracle(g, m_est, Rng(opts.seed));
  json results = json::array();
  std::uint64_t corrected = 0;
  for (std::uint64_t i = 0; i < args.count; ++i) {
    const EdgeSample s = sampler.sample(oracle);
    corrected += s.corrected ? 1 : 0;
    results.push_back(sample_row(s));
  }
  if (!args.dump_correction.empty()) dump_correction(args.dump_correction, g, sampler.correction());
  const SamplerConfig& cfg = sampler.config();
  const json config = {{"sampler", "exact"}, {"delta", cfg.epsilon},         {"ell", cfg.ell},
                       {"m_est", m_est},     {"max_attempts", cfg.max_attempts}, {"count", args.count},
                       {"corrected", corrected}, {"seed", opts.seed}};
  emit(opts, graph_json(g, cfg.theta), config, results);
  return kExitOk;
}

struct CoupleArgs {
  GraphSource graph;
  double epsilon = 0.5;
  std::size_t k = 10;
  std::size_t trials = 10'000;
  double tolerance = 0.1;
  std::optional<std::size_t> m_est;
};

int run_couple(const GlobalOptions& opts, const CoupleArgs& args) {
  const Graph g = args.graph.load(opts.seed);
  const CouplingOptions copts{args.epsilon, args.k, args.trials, opts.seed, args.m_est};
  const CouplingReport r = coupled_run(degree_sum_estimator_test(g, args.tolerance), g, copts);
  const json row = {{"tv_analytic", r.tv_analytic},
                    {"pointwise_analytic", r.pointwise_analytic},
                    {"draws", r.draws},
                    {"disagreements", r.disagreements},
                    {"per_query_disagreement", r.per_query_disagreement},
                    {"per_query_stderr", r.per_query_stderr},
                    {"stream_difference", r.stream_difference},
                    {"stream_stderr", r.stream_stderr},
                    {"union_bound", std::min(1.0, static_cast<double>(r.k) * r.tv_analytic)},
                    {"success_uniform", r.success_uniform},
                    {"success_approx", r.success_approx},
                    {"downstream_divergence", r.downstream_divergence}};
  const json config = {{"epsilon", args.epsilon},     {"ell", ell_of(args.epsilon)}, {"k", args.k},
                       {"trials", args.trials},       {"algorithm", "degree_sum_estimator"},
                       {"tolerance", args.tolerance}, {"seed", opts.seed}};
  const auto cls = classify(g, args.m_est.value_or(g.num_edges()));
  emit(opts, graph_json(g, cls.theta), config, json::array({row}));
  return kExitOk;
}

struct VerifyArgs {
  GraphSource graph;
  std::vector<double> epsilons{0.5, 0.25, 1.0 / 16};
  double tolerance = 1e-12;
  std::string dump_h;
};

void dump_h_table(const std::string& path, const HTable& ht) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "'");
  out.precision(17);
  out << "vertex,level,value\n";
  for (int level = 1; level <= ht.levels(); ++level) {
    for (Vertex v = 0; v < ht.num_vertices(); ++v) out << v << ',' << level << ',' << ht.at(v, level) << '\n';
  }
}

// Enumerated single-attempt distribution against the closed form, and the
// conditioned distribution against uniform, for each epsilon.
int run_verify(const GlobalOptions& opts, const VerifyArgs& args) {
  const Graph g = args.graph.load(opts.seed);
  if (g.num_edges() == 0) throw std::invalid_argument("verify needs a graph with edges");
  const auto cls = classify(g, g.num_edges());
  const EdgeDistribution uniform = uniform_edge_distribution<double>(g);
  bool all_ok = true;
  json results = json::array();
  int max_ell = 1;
  for (double eps : args.epsilons) {
    const int ell = ell_of(eps);
    max_ell = std::max(max_ell, ell);
    const EdgeDistribution walk = exact_attempt_distribution<double>(g, cls, ell);
    const HTable ht = compute_h<double>(g, cls, ell);
    const int level = std::max(1, attempt_bias_level(ell));
    const EdgeDistribution formula = formula_attempt_distribution(g, cls, ht, ell, level);
    const EdgeDistribution stated = formula_attempt_distribution(g, cls, ht, ell, ell);
    double deviation = 0;
    double stated_deviation = 0;
    for (std::size_t s = 0; s < walk.mass.size(); ++s) {
      deviation = std::max(deviation, std::abs(walk.mass[s] - formula.mass[s]));
      stated_deviation = std::max(stated_deviation, std::abs(walk.mass[s] - stated.mass[s]));
    }
    // ell = 1 never takes a heavy step, so there is no level to compare with.
    if (ell == 1) deviation = 0;
    const EdgeDistribution conditioned = walk.condition();
    const double pointwise = pointwise_distance(conditioned, uniform);
    const double tv = tv_distance(conditioned, uniform);
    const HBoundReport bounds = check_h_bounds(ht, cls);
    const bool formula_ok = deviation <= args.tolerance;
    const bool close_ok = pointwise <= eps + 1e-12;
    const bool tv_ok = tv <= pointwise + 1e-12;
    const bool ok = formula_ok && close_ok && tv_ok;
    all_ok = all_ok && ok;
    results.push_back({{"epsilon", eps},
                       {"ell", ell},
                       {"h_level", level},
                       {"max_formula_deviation", deviation},
                       {"max_deviation_at_ell", stated_deviation},
                       {"pointwise", pointwise},
                       {"tv", tv},
                       {"success_probability", walk.total()},
                       {"heavy_vertices", bounds.heavy_vertices},
                       {"h_bound_violations", bounds.first_level_violations + bounds.level_violations},
                       {"formula_ok", formula_ok},
                       {"pointwise_ok", close_ok},
                       {"tv_ok", tv_ok},
                       {"pass", ok}});
  }
  if (!args.dump_h.empty()) dump_h_table(args.dump_h, compute_h<double>(g, cls, max_ell));
  const json config = {{"epsilons", args.epsilons}, {"tolerance", args.tolerance}};
  emit(opts, graph_json(g, cls.theta), config, results);
  if (!all_ok) std::cerr << "verification failed\n";
  return all_ok ? kExitOk : kExitVerifyFailed;
}

struct BenchArgs {
  std::string family = "gnp:8";
  std::vector<std::size_t> sizes{1000, 10000};
  double epsilon = 1.0 / 16;
  std::size_t samples = 1000;
};

int run_bench(const GlobalOptions& opts, const BenchArgs& args) {
  const auto records = bench_scaling(parse_bench_family(args.family), args.sizes, args.epsilon, args.samples,
                                     opts.seed);
  Output out(opts.out);
  if (opts.format == "csv") {
    write_bench_csv(out.stream(), records);
    return kExitOk;
  }
  json results = json::array();
  for (const auto& r : records) {
    results.push_back({{"graph_id", r.graph_id},
                       {"n", r.n},
                       {"m", r.m},
                       {"epsilon", r.epsilon},
                       {"samples", r.samples},
                       {"mean_queries", r.mean_queries},
                       {"mean_attempts", r.mean_attempts},
                       {"attempts_stderr", r.attempts_stderr},
                       {"predicted_attempts", r.predicted_attempts},
                       {"expected_attempts", r.expected_attempts},
                       {"complexity_ratio", r.complexity_ratio},
                       {"seconds_per_sample", r.seconds_per_sample}});
  }
  const json config = {{"family", args.family}, {"epsilon", args.epsilon}, {"samples", args.samples},
                       {"seed", opts.seed}};
  // The graph block describes the largest size.
  json graph = json::object();
  if (!records.empty()) graph = {{"n", records.back().n}, {"m", records.back().m},
                                 {"theta", theta_of(records.back().m)}};
  const json report = {{"graph", graph}, {"config", config}, {"results", results}};
  out.stream() << report.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sublinear uniform edge sampling in the graph query model"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--seed", opts.seed, "RNG seed")->capture_default_str();
  app.add_option("--out", opts.out, "Output file (default: stdout)");
  app.add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  const auto global = [&](CLI::App* cmd) {
    cmd->fallthrough();
    return cmd;
  };

  std::string gen_spec;
  auto* generate_cmd = global(app.add_subcommand("generate", "Write a generated graph as an edge list"));
  generate_cmd->add_option("spec", gen_spec, "e.g. star:4, double_star:6, gnp:100,0.1")->required();

  SampleArgs sample;
  auto* sample_cmd = global(app.add_subcommand("sample", "Approximately uniform edge samples"));
  add_graph_options(sample_cmd, sample.graph);
  sample_cmd->add_option("--epsilon", sample.accuracy, "Pointwise accuracy in (0, 1/2]")->capture_default_str();
  sample_cmd->add_option("--count", sample.count, "Number of samples")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--m-est", sample.m_est, "Declared edge count (default: true m)");
  sample_cmd->add_option("--max-attempts", sample.max_attempts, "Attempt cap per sample");

  SampleArgs exact;
  auto* exact_cmd = global(app.add_subcommand("exact-sample", "Exactly uniform edge samples"));
  add_graph_options(exact_cmd, exact.graph);
  auto* delta_opt = exact_cmd->add_option("--delta", exact.accuracy, "Mixture weight (default n^-3)");
  exact_cmd->add_option("--count", exact.count, "Number of samples")->check(CLI::PositiveNumber);
  exact_cmd->add_option("--max-attempts", exact.max_attempts, "Attempt cap per sample");
  exact_cmd->add_option("--dump-correction", exact.dump_correction, "Write v,w,q,r rows to this CSV file");

  CoupleArgs couple;
  auto* couple_cmd = global(app.add_subcommand("couple", "Coupled run of uniform and approximate edge streams"));
  add_graph_options(couple_cmd, couple.graph);
  couple_cmd->add_option("--epsilon", couple.epsilon)->capture_default_str();
  couple_cmd->add_option("--k", couple.k, "Edge queries per trial")->check(CLI::PositiveNumber);
  couple_cmd->add_option("--trials", couple.trials)->check(CLI::PositiveNumber);
  couple_cmd->add_option("--tolerance", couple.tolerance, "Relative tolerance of the downstream estimator");
  couple_cmd->add_option("--m-est", couple.m_est);

  VerifyArgs verify;
  auto* verify_cmd = global(app.add_subcommand("verify", "Check enumerated attempt distributions on a graph"));
  add_graph_options(verify_cmd, verify.graph);
  verify_cmd->add_option("--epsilon", verify.epsilons, "One or more accuracies")->delimiter(',');
  verify_cmd->add_option("--tolerance", verify.tolerance)->capture_default_str();
  verify_cmd->add_option("--dump-h", verify.dump_h, "Write vertex,level,value rows to this CSV file");

  BenchArgs bench;
  auto* bench_cmd = global(app.add_subcommand("bench", "Query-complexity scaling over a graph family"));
  bench_cmd->add_option("--family", bench.family, "gnp:<avg_degree>, double_star or star")->capture_default_str();
  bench_cmd->add_option("--sizes", bench.sizes, "Vertex counts")->delimiter(',');
  bench_cmd->add_option("--epsilon", bench.epsilon)->capture_default_str();
  bench_cmd->add_option("--samples", bench.samples)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  const auto require_graph = [](const GraphSource& src) {
    if (src.path.empty() && src.gen.empty()) throw CLI::RequiredError("--graph or --gen");
  };

  try {
    if (*generate_cmd) return run_generate(opts, gen_spec);
    if (*sample_cmd) {
      require_graph(sample.graph);
      sample.accuracy_set = true;
      return run_sample(opts, sample);
    }
    if (*exact_cmd) {
      require_graph(exact.graph);
      exact.accuracy_set = delta_opt->count() > 0;
      return run_exact_sample(opts, exact);
    }
    if (*couple_cmd) {
      require_graph(couple.graph);
      return run_couple(opts, couple);
    }
    if (*verify_cmd) {
      require_graph(verify.graph);
      return run_verify(opts, verify);
    }
    if (*bench_cmd) return run_bench(opts, bench);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
