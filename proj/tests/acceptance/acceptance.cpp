// Acceptance suite. Prints one PASS/FAIL line per criterion, with indented
// detail lines, and exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "edgesamp/approx_sampler.hpp"
#include "edgesamp/bench.hpp"
#include "edgesamp/classification.hpp"
#include "edgesamp/coupling.hpp"
#include "edgesamp/distance.hpp"
#include "edgesamp/empirical.hpp"
#include "edgesamp/enumeration.hpp"
#include "edgesamp/exact_sampler.hpp"
#include "edgesamp/htable.hpp"
#include "edgesamp/stats.hpp"
#include "panel.hpp"

namespace {

using namespace edgesamp;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kRationalMaxN = 50;
const std::vector<double> kEpsilons{0.5, 0.25, 1.0 / 16};

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> details;

  void note(const std::string& line) { details.push_back(line); }
  void fail(const std::string& line) {
    pass = false;
    details.push_back("violation: " + line);
  }
};

template <class... Args>
std::string fmt(const char* format, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool has_heavy_step(const EdgeClassification& cls) {
  for (std::size_t v = 0; v < cls.is_heavy.size(); ++v) {
    if (cls.is_heavy[v] && cls.heavy_degree[v] > 0) return true;
  }
  return false;
}

// Compares the enumerated single-attempt distribution with the closed form at
// one h level. Returns the number of mismatching slots.
std::size_t formula_mismatches(const Graph& g, const EdgeClassification& cls, int ell, int level,
                               double* max_dev) {
  std::size_t bad = 0;
  if (g.num_vertices() <= kRationalMaxN) {
    const auto walk = exact_attempt_distribution<Rational>(g, cls, ell, rational_enumeration_limits());
    const auto ht = compute_h<Rational>(g, cls, ell);
    const auto formula = formula_attempt_distribution(g, cls, ht, ell, level);
    for (std::size_t s = 0; s < walk.mass.size(); ++s) {
      if (walk.mass[s] != formula.mass[s]) {
        ++bad;
        *max_dev = std::max(*max_dev, std::abs(to_double(Rational(walk.mass[s] - formula.mass[s]))));
      }
    }
  } else {
    const auto walk = exact_attempt_distribution<double>(g, cls, ell);
    const auto ht = compute_h<double>(g, cls, ell);
    const auto formula = formula_attempt_distribution(g, cls, ht, ell, level);
    for (std::size_t s = 0; s < walk.mass.size(); ++s) {
      const double dev = std::abs(walk.mass[s] - formula.mass[s]);
      if (dev > 1e-12) {
        ++bad;
        *max_dev = std::max(*max_dev, dev);
      }
    }
  }
  return bad;
}

Criterion formula_reproduction(const std::vector<testing::PanelGraph>& panel) {
  Criterion c{1, "Formula reproduction: enumerated attempt mass = (1 - h[v][ell]) / (ell n theta)"};
  const auto start = Clock::now();
  std::size_t checks = 0;
  std::size_t failing_cases = 0;
  std::size_t realized_failures = 0;
  for (const auto& [name, g] : panel) {
    const auto cls = classify(g, g.num_edges());
    for (double eps : kEpsilons) {
      const int ell = ell_of(eps);
      ++checks;
      double dev = 0;
      const std::size_t bad = formula_mismatches(g, cls, ell, ell, &dev);
      if (bad > 0) {
        ++failing_cases;
        c.fail(fmt("%s eps=%g: %zu of %zu directed edges differ (max |diff| %.3g)", name.c_str(), eps, bad,
                   g.num_directed_edges(), dev));
      }
      double realized_dev = 0;
      realized_failures += formula_mismatches(g, cls, ell, attempt_bias_level(ell), &realized_dev) > 0 ? 1 : 0;
    }
  }
  const double elapsed = seconds_since(start);
  c.note(fmt("%zu graph/epsilon cases, %zu disagree at level ell (rational for n <= %zu, 1e-12 otherwise)", checks,
             failing_cases, kRationalMaxN));
  c.note(fmt("same enumeration against (1 - h[v][ell-1]) / (ell n theta): %zu of %zu cases disagree",
             realized_failures, checks));
  c.note(fmt("runtime %.2f s (limit 60 s)", elapsed));
  if (elapsed >= 60) c.fail("runtime over 60 s");
  return c;
}

Criterion h_bound(const std::vector<testing::PanelGraph>& panel) {
  Criterion c{2, "h-bound: h[v][i] <= 2^-i for all levels, h[v][1] <= 1/2 for heavy v"};
  constexpr int kLevels = 16;
  double worst = 0;
  for (const auto& [name, g] : panel) {
    const auto cls = classify(g, g.num_edges());
    HBoundReport report;
    if (g.num_vertices() <= kRationalMaxN) {
      report = check_h_bounds(compute_h<Rational>(g, cls, kLevels), cls);
    } else {
      report = check_h_bounds(compute_h<double>(g, cls, kLevels), cls, 0.0);
    }
    worst = std::max(worst, report.worst_scaled);
    if (!report.ok()) {
      c.fail(fmt("%s: %zu first-level and %zu level violations", name.c_str(), report.first_level_violations,
                 report.level_violations));
    }
  }
  c.note(fmt("%zu graphs, levels 1..%d; max h[v][i] * 2^i = %.4f", panel.size(), kLevels, worst));
  return c;
}

Criterion pointwise_closeness(const std::vector<testing::PanelGraph>& panel) {
  Criterion c{3, "Pointwise closeness: conditioned attempt distribution within epsilon of uniform"};
  double worst_ratio = 0;
  double worst_tight_ratio = 0;
  std::size_t tight_violations = 0;
  for (const auto& [name, g] : panel) {
    const auto cls = classify(g, g.num_edges());
    const EdgeDistribution uniform = uniform_edge_distribution<double>(g);
    for (double eps : kEpsilons) {
      const int ell = ell_of(eps);
      double pw = 0;
      if (g.num_vertices() <= kRationalMaxN) {
        const auto cond =
            exact_attempt_distribution<Rational>(g, cls, ell, rational_enumeration_limits()).condition();
        const Rational target(1, static_cast<long long>(g.num_directed_edges()));
        Rational worst(0);
        for (const auto& x : cond.mass) {
          const Rational rel = abs(Rational(x / target - 1));
          if (rel > worst) worst = rel;
        }
        pw = to_double(worst);
      } else {
        pw = pointwise_distance(exact_attempt_distribution<double>(g, cls, ell).condition(), uniform);
      }
      const double tight = (eps / 2) / (1 - eps / 2);
      worst_ratio = std::max(worst_ratio, pw / eps);
      worst_tight_ratio = std::max(worst_tight_ratio, pw / tight);
      if (pw > tight + 1e-12) ++tight_violations;
      if (pw > eps + 1e-12) c.fail(fmt("%s eps=%g: pointwise %.6g", name.c_str(), eps, pw));
    }
  }
  c.note(fmt("max pointwise / epsilon = %.4f over %zu cases", worst_ratio, panel.size() * kEpsilons.size()));
  c.note(fmt("reported only: tighter bound (eps/2)/(1-eps/2) exceeded in %zu cases, max ratio %.4f",
             tight_violations, worst_tight_ratio));
  return c;
}

Criterion exactness(const std::vector<testing::PanelGraph>& panel) {
  Criterion c{4, "Exactness: (1-delta) P_cond + delta r = 1/(2m) exactly; r >= 0, sum r = 1"};
  std::size_t rational_cases = 0;
  for (const auto& [name, g] : panel) {
    if (g.num_vertices() > kRationalMaxN) continue;
    const auto cls = classify(g, g.num_edges());
    const auto n = static_cast<long long>(g.num_vertices());
    for (const Rational delta : {Rational(1, 2), Rational(1, 16), Rational(1, n * n * n)}) {
      ++rational_cases;
      const int ell = ell_for(delta);
      const auto cond = exact_attempt_distribution<Rational>(g, cls, ell, rational_enumeration_limits()).condition();
      const auto w = correction_weights(g, compute_h<Rational>(g, cls, ell), delta);
      const Rational target(1, static_cast<long long>(g.num_directed_edges()));
      std::size_t off = 0;
      std::size_t negative = 0;
      Rational sum(0);
      for (std::size_t s = 0; s < g.num_directed_edges(); ++s) {
        if ((1 - delta) * cond.mass[s] + delta * w.r[s] != target) ++off;
        if (w.r[s] < 0) ++negative;
        sum += w.r[s];
      }
      if (off > 0 || negative > 0 || sum != 1) {
        c.fail(fmt("%s delta=%s: %zu non-uniform slots, %zu negative weights, sum r = %s", name.c_str(),
                   delta.str().c_str(), off, negative, sum.str().c_str()));
      }
    }
  }
  double worst_sum = 0;
  for (const auto& [name, g] : panel) {
    const auto corr = build_correction(g, default_delta(g.num_vertices()));
    double sum = 0;
    for (double r : corr.r()) {
      if (r < 0) c.fail(name + ": negative double weight");
      sum += r;
    }
    worst_sum = std::max(worst_sum, std::abs(sum - 1));
    if (std::abs(sum - 1) > 1e-9) c.fail(fmt("%s: double sum r - 1 = %.3g", name.c_str(), sum - 1));
  }
  c.note(fmt("%zu rational cases (n <= %zu, delta in {1/2, 1/16, n^-3}); marginal from the enumeration", rational_cases,
             kRationalMaxN));
  c.note(fmt("double mode, delta = n^-3, all %zu graphs: max |sum r - 1| = %.3g", panel.size(), worst_sum));
  return c;
}

Criterion empirical_uniformity() {
  Criterion c{5, "Empirical uniformity: 10^6 exact draws on a 50-edge graph, chi-square alpha=0.001, >= 18/20 seeds"};
  const Graph g = testing::fifty_edge_graph();
  constexpr int kSeeds = 20;
  constexpr std::uint64_t kDraws = 1'000'000;
  constexpr double kAlpha = 0.001;
  const auto start = Clock::now();
  int accepted = 0;
  double max_stat = 0;
  double critical = 0;
  for (int seed = 1; seed <= kSeeds; ++seed) {
    const auto counts = empirical_distribution({SamplerKind::Exact, std::nullopt, std::nullopt}, g, kDraws,
                                               static_cast<std::uint64_t>(seed));
    const auto result = chi_square_uniform(counts, kAlpha);
    accepted += result.reject ? 0 : 1;
    max_stat = std::max(max_stat, result.statistic);
    critical = result.critical;
  }
  const double elapsed = seconds_since(start);
  const int rejected = kSeeds - accepted;
  c.note(fmt("graph n=%zu m=%zu; %d of %d seeds accept; max statistic %.2f vs critical %.2f (dof %zu)",
             g.num_vertices(), g.num_edges(), accepted, kSeeds, max_stat, critical, g.num_edges() - 1));
  c.note(fmt("P[>= %d rejections | exact] = %.3g", rejected, binomial_upper_tail(kSeeds, kAlpha, rejected)));
  c.note(fmt("runtime %.1f s (limit 120 s)", elapsed));
  if (accepted < 18) c.fail(fmt("only %d seeds accept", accepted));
  if (elapsed >= 120) c.fail("runtime over 120 s");
  return c;
}

Criterion expected_attempts(const std::vector<testing::PanelGraph>& panel) {
  Criterion c{6, "Expected attempts: mean over 10^5 runs within 3 SE of ell n theta / sum(1 - h[v][ell])"};
  constexpr int kRuns = 100'000;
  std::size_t graphs = 0;
  std::size_t stated_ok = 0;
  std::size_t realized_ok = 0;
  std::size_t cases = 0;
  std::uint64_t seed = 100;
  for (const auto& [name, g] : panel) {
    ++graphs;
    const auto cls = classify(g, g.num_edges());
    for (double eps : {0.5, 0.25}) {
      ++cases;
      const SamplerConfig cfg = make_sampler_config(eps, g.num_vertices(), g.num_edges());
      QueryOracle oracle(g, g.num_edges(), Rng(seed++));
      RunningStats stats;
      for (int i = 0; i < kRuns; ++i) stats.add(static_cast<double>(sample_edge(oracle, cfg).attempts));
      const auto ht = compute_h<double>(g, cls, cfg.ell);
      const double stated = formula_expected_attempts(g, cls, ht, cfg.ell, cfg.ell);
      const double realized = formula_expected_attempts(g, cls, ht, cfg.ell, attempt_bias_level(cfg.ell));
      const double se = stats.standard_error();
      const double z_stated = (stats.mean() - stated) / se;
      const double z_realized = (stats.mean() - realized) / se;
      if (std::abs(z_realized) <= 3) ++realized_ok;
      if (std::abs(z_stated) <= 3) {
        ++stated_ok;
      } else {
        c.fail(fmt("%s eps=%g: mean %.4f, formula %.4f, %.1f SE (ell-1 form %.4f, %.1f SE)", name.c_str(), eps,
                   stats.mean(), stated, z_stated, realized, z_realized));
      }
    }
  }
  c.note(fmt("%zu graphs, %zu cases: %zu within 3 SE of the level-ell formula", graphs, cases, stated_ok));
  c.note(fmt("same runs against ell n theta / sum(1 - h[v][ell-1]): %zu of %zu within 3 SE", realized_ok, cases));
  if (graphs < 5) c.fail("fewer than 5 graphs");
  return c;
}

Criterion scaling() {
  Criterion c{7, "Scaling: mean queries / (n/sqrt(m) log2(1/eps)) varies < 2x over n = 10^3..10^5"};
  const std::vector<std::size_t> sizes{1'000, 10'000, 100'000};
  const auto records = bench_scaling(parse_bench_family("gnp:8"), sizes, 1.0 / 16, 20'000, 7);
  double lo = INFINITY;
  double hi = 0;
  for (const auto& r : records) {
    lo = std::min(lo, r.complexity_ratio);
    hi = std::max(hi, r.complexity_ratio);
    c.note(fmt("%s: m=%zu mean queries %.1f, mean attempts %.2f (expected %.2f), ratio %.4f", r.graph_id.c_str(),
               r.m, r.mean_queries, r.mean_attempts, r.expected_attempts, r.complexity_ratio));
  }
  c.note(fmt("max/min ratio %.4f", hi / lo));
  if (!(hi / lo < 2.0)) c.fail(fmt("ratio spread %.3f", hi / lo));
  return c;
}

Criterion coupling(const std::vector<testing::PanelGraph>& panel) {
  Criterion c{8, "Coupling: P[X != Y] = TV, disagreement within 3 sigma, k=10 stream difference <= k TV + 3 sigma"};
  std::size_t graphs = 0;
  for (const auto& [name, g] : panel) {
    ++graphs;
    const auto cls = classify(g, g.num_edges());
    const int ell = ell_of(0.5);
    if (g.num_vertices() <= kRationalMaxN) {
      const auto p = exact_attempt_distribution<Rational>(g, cls, ell, rational_enumeration_limits()).condition();
      const auto u = uniform_edge_distribution<Rational>(g);
      Rational differ(0);
      Rational tv(0);
      for (const auto& cell : maximal_coupling_table<Rational>(p.mass, u.mass)) {
        if (cell.x != cell.y) differ += cell.mass;
      }
      for (std::size_t s = 0; s < p.mass.size(); ++s) tv += abs(Rational(p.mass[s] - u.mass[s]));
      tv /= 2;
      if (differ != tv) c.fail(name + ": analytic P[X != Y] differs from TV");
    } else {
      const auto p = exact_attempt_distribution<double>(g, cls, ell).condition();
      const auto u = uniform_edge_distribution<double>(g);
      double differ = 0;
      for (const auto& cell : maximal_coupling_table<double>(p.mass, u.mass)) {
        if (cell.x != cell.y) differ += cell.mass;
      }
      if (std::abs(differ - tv_distance(p, u)) > 1e-12) c.fail(name + ": analytic P[X != Y] differs from TV");
    }

    const CouplingOptions opts{0.5, 10, 10'000, 500 + graphs, std::nullopt};
    const CouplingReport r = coupled_run(degree_sum_estimator_test(g, 0.1), g, opts);
    const double z = r.per_query_stderr > 0 ? (r.per_query_disagreement - r.tv_analytic) / r.per_query_stderr : 0;
    if (r.per_query_stderr == 0 ? r.disagreements != 0 : std::abs(z) > 3) {
      c.fail(fmt("%s: disagreement %.5f vs TV %.5f (%.1f sigma)", name.c_str(), r.per_query_disagreement,
                 r.tv_analytic, z));
    }
    const double bound = static_cast<double>(opts.k) * r.tv_analytic + 3 * r.stream_stderr;
    if (r.stream_difference > bound) {
      c.fail(fmt("%s: stream difference %.4f > %.4f", name.c_str(), r.stream_difference, bound));
    }
    if (r.tv_analytic > 1e-12) {
      c.note(fmt("%s: TV %.5f, disagreement %.5f (%+.1f sigma), stream %.4f <= %.4f, downstream |diff| %.4f",
                 name.c_str(), r.tv_analytic, r.per_query_disagreement, z, r.stream_difference, bound,
                 r.downstream_divergence));
    }
  }
  c.note(fmt("%zu graphs, epsilon = 1/2, 10^5 coupled draws each", graphs));
  return c;
}

Criterion query_budget(const std::vector<testing::PanelGraph>& panel) {
  Criterion c{9, "Query budget: every attempt with parameter k issues <= 2k + 2 queries (10^6 attempts)"};
  constexpr std::uint64_t kAttempts = 1'000'000;
  std::uint64_t done = 0;
  std::uint64_t violations = 0;
  std::uint64_t mismatched_reports = 0;
  std::uint64_t max_slack_used = 0;
  Rng picker(99);
  const std::uint64_t per_graph = kAttempts / panel.size() + 1;
  for (const auto& [name, g] : panel) {
    QueryOracle oracle(g, g.num_edges(), Rng(1000 + done));
    const std::size_t theta = classify(g, g.num_edges()).theta;
    for (std::uint64_t i = 0; i < per_graph && done < kAttempts; ++i, ++done) {
      const int ell = ell_of(kEpsilons[picker.uniform_index(kEpsilons.size())]);
      const int k = static_cast<int>(picker.uniform_one_based(ell));
      const std::uint64_t before = oracle.counters().total();
      const AttemptOutcome out = sampling_attempt(oracle, k, theta);
      const std::uint64_t used = oracle.counters().total() - before;
      if (used != out.queries_used) ++mismatched_reports;
      if (used > static_cast<std::uint64_t>(2 * k + 2)) ++violations;
      max_slack_used = std::max(max_slack_used, used - std::min<std::uint64_t>(used, 2 * k));
    }
  }
  c.note(fmt("%llu attempts over %zu graphs; max queries beyond 2k: %llu; self-report mismatches: %llu",
             static_cast<unsigned long long>(done), panel.size(), static_cast<unsigned long long>(max_slack_used),
             static_cast<unsigned long long>(mismatched_reports)));
  if (violations > 0) c.fail(fmt("%llu attempts over budget", static_cast<unsigned long long>(violations)));
  if (mismatched_reports > 0) c.fail("attempt query count disagrees with the oracle counters");
  return c;
}

}  // namespace

int main() {
  const auto panel = testing::panel();
  std::cout << "panel: " << panel.size() << " graphs\n";
  const std::vector<std::function<Criterion()>> runs{
      [&] { return formula_reproduction(panel); },
      [&] { return h_bound(panel); },
      [&] { return pointwise_closeness(panel); },
      [&] { return exactness(panel); },
      [] { return empirical_uniformity(); },
      [&] { return expected_attempts(panel); },
      [] { return scaling(); },
      [&] { return coupling(panel); },
      [&] { return query_budget(panel); },
  };
  int failed = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    Criterion c{static_cast<int>(i + 1), "(aborted)"};
    try {
      c = runs[i]();
    } catch (const std::exception& e) {
      c.pass = false;
      c.details.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (c.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << '\n';
    for (const auto& line : c.details) std::cout << "      " << line << '\n';
    std::cout.flush();
    failed += c.pass ? 0 : 1;
  }
  std::cout << (runs.size() - failed) << " of " << runs.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
