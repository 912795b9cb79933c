#include <gtest/gtest.h>

#include <sstream>

#include "edgesamp/bench.hpp"
#include "edgesamp/classification.hpp"
#include "edgesamp/distance.hpp"
#include "edgesamp/empirical.hpp"
#include "edgesamp/enumeration.hpp"
#include "edgesamp/generators.hpp"
#include "edgesamp/graph_io.hpp"
#include "edgesamp/rng.hpp"
#include "edgesamp/stats.hpp"
#include "panel.hpp"

namespace edgesamp {
namespace {

RationalEdgeDistribution enumerate(const Graph& g, int ell) {
  return exact_attempt_distribution<Rational>(g, classify(g, g.num_edges()), ell, rational_enumeration_limits());
}

TEST(Enumeration, StarIsFlat) {
  const auto d = enumerate(star(4), 2);
  ASSERT_EQ(d.mass.size(), 8u);
  for (const auto& x : d.mass) EXPECT_EQ(x, Rational(1, 30));
  EXPECT_EQ(d.fail_mass, Rational(11, 15));
}

TEST(Enumeration, DoubleStarHeavySlots) {
  const Graph g = double_star(6);
  const auto d = enumerate(g, 2);
  for (std::size_t s = 0; s < g.num_directed_edges(); ++s) {
    EXPECT_EQ(d.mass[s], g.slot_source(s) < 2 ? Rational(1, 196) : Rational(1, 168)) << s;
  }
  EXPECT_EQ(d.total() + d.fail_mass, 1);
}

TEST(Enumeration, MatchesClosedFormAtRealizedLevel) {
  for (const auto& [name, g] : testing::panel()) {
    if (g.num_vertices() > 50) continue;
    const auto cls = classify(g, g.num_edges());
    for (int ell : {1, 2, 3, 5, 8}) {
      const auto walk = enumerate(g, ell);
      if (ell == 1) {
        // No heavy step is possible; the formula's level would be 0.
        for (std::size_t s = 0; s < g.num_directed_edges(); ++s) {
          const Rational expect =
              cls.is_heavy[g.slot_source(s)] ? Rational(0) : Rational(1) / (g.num_vertices() * cls.theta);
          EXPECT_EQ(walk.mass[s], expect) << name;
        }
        continue;
      }
      const auto ht = compute_h<Rational>(g, cls, ell);
      const auto formula = formula_attempt_distribution(g, cls, ht, ell, attempt_bias_level(ell));
      EXPECT_EQ(walk.mass, formula.mass) << name << " ell=" << ell;
      EXPECT_EQ(walk.fail_mass, formula.fail_mass) << name;
    }
  }
}

TEST(Enumeration, DoubleMatchesRational) {
  for (const auto& [name, g] : testing::panel()) {
    if (g.num_vertices() > 50) continue;
    const auto cls = classify(g, g.num_edges());
    const auto exact = to_double(enumerate(g, 6));
    const auto fast = exact_attempt_distribution<double>(g, cls, 6);
    for (std::size_t s = 0; s < exact.mass.size(); ++s) EXPECT_NEAR(fast.mass[s], exact.mass[s], 1e-15) << name;
  }
}

TEST(Enumeration, ResourceGuard) {
  const Graph g = gnp(60, 0.1, 9);
  EXPECT_THROW(enumerate(g, 3), ResourceLimitError);
  EXPECT_THROW(exact_attempt_distribution<double>(g, classify(g, g.num_edges()), 65), ResourceLimitError);
}

TEST(Enumeration, ExpectedAttempts) {
  const Graph g = star(4);
  const auto cls = classify(g, 4);
  const auto ht = compute_h<Rational>(g, cls, 2);
  EXPECT_EQ(formula_expected_attempts(g, cls, ht, 2, 1), Rational(15, 4));
}

TEST(Distance, Examples) {
  const std::vector<double> p{0.5, 0.5};
  const std::vector<double> q{0.6, 0.4};
  EXPECT_NEAR(pointwise_distance(p, q), 0.25, 1e-15);
  EXPECT_NEAR(tv_distance(p, q), 0.1, 1e-15);
  EXPECT_DOUBLE_EQ(tv_distance(std::vector<double>{1, 0}, std::vector<double>{0.5, 0.5}), 0.5);
  EXPECT_EQ(pointwise_distance(p, p), 0.0);
}

TEST(Distance, Errors) {
  EXPECT_THROW(tv_distance(std::vector<double>{1}, std::vector<double>{0.5, 0.5}), DistributionError);
  EXPECT_THROW(pointwise_distance(std::vector<double>{0.5, 0.5}, std::vector<double>{1, 0}), DistributionError);
}

TEST(Distance, TvBoundedByPointwise) {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t size = 2 + rng.uniform_index(30);
    std::vector<double> p(size), q(size);
    double sp = 0, sq = 0;
    for (std::size_t i = 0; i < size; ++i) {
      p[i] = rng.uniform01();
      q[i] = 0.05 + rng.uniform01();
      sp += p[i];
      sq += q[i];
    }
    for (std::size_t i = 0; i < size; ++i) {
      p[i] /= sp;
      q[i] /= sq;
    }
    const double tv = tv_distance(p, q);
    EXPECT_LE(tv, pointwise_distance(p, q) + 1e-15);
    EXPECT_GE(tv, 0.0);
    EXPECT_LE(tv, 1.0);
  }
}

TEST(Stats, ChiSquareExamples) {
  const std::vector<std::uint64_t> flat(8, 125);
  const auto even = chi_square_uniform(flat, 0.01);
  EXPECT_EQ(even.statistic, 0.0);
  EXPECT_EQ(even.dof, 7u);
  EXPECT_FALSE(even.reject);

  const std::vector<std::uint64_t> lopsided{1000, 0};
  const auto skew = chi_square_uniform(lopsided, 0.01);
  EXPECT_DOUBLE_EQ(skew.statistic, 1000.0);
  EXPECT_TRUE(skew.reject);

  EXPECT_THROW(chi_square_uniform(std::vector<std::uint64_t>{5, 4}, 0.01), std::invalid_argument);
}

TEST(Stats, CriticalValues) {
  // Tabulated chi-square upper quantiles.
  EXPECT_NEAR(chi_square_critical(1, 0.05), 3.841, 0.1);
  EXPECT_NEAR(chi_square_critical(10, 0.01), 23.209, 0.1);
  EXPECT_NEAR(chi_square_critical(99, 0.01), 134.642, 0.2);
  EXPECT_NEAR(normal_upper_quantile(0.025), 1.959964, 1e-5);
}

TEST(Stats, BinomialTail) {
  EXPECT_NEAR(binomial_upper_tail(20, 0.9, 18), 0.676927, 1e-5);
  EXPECT_DOUBLE_EQ(binomial_upper_tail(10, 0.5, 0), 1.0);
  EXPECT_NEAR(binomial_upper_tail(10, 0.5, 10), 1.0 / 1024, 1e-12);
}

TEST(Stats, RunningStats) {
  RunningStats s;
  for (double x : {2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0}) s.add(x);
  EXPECT_DOUBLE_EQ(s.mean(), 5.0);
  EXPECT_NEAR(s.variance(), 32.0 / 7.0, 1e-12);
}

TEST(Empirical, DeterministicAndSized) {
  const Graph g = testing::heavy_core(3, 15, 2);
  const SamplerSpec spec{SamplerKind::Approximate, 0.25, std::nullopt};
  const auto a = empirical_distribution(spec, g, 5000, 3);
  EXPECT_EQ(a, empirical_distribution(spec, g, 5000, 3));
  EXPECT_NE(a, empirical_distribution(spec, g, 5000, 4));
  ASSERT_EQ(a.size(), g.num_edges());
  std::uint64_t total = 0;
  for (auto c : a) total += c;
  EXPECT_EQ(total, 5000u);
  EXPECT_THROW(empirical_distribution(spec, g, 0, 3), std::invalid_argument);
}

TEST(Empirical, ExactSamplerPassesUniformityOnPanel) {
  const Graph g = testing::fifty_edge_graph();
  const auto counts = empirical_distribution({SamplerKind::Exact, std::nullopt, std::nullopt}, g, 200'000, 21);
  EXPECT_FALSE(chi_square_uniform(counts, 1e-4).reject);
}

TEST(Bench, EllScalesWithEpsilon) {
  const Graph g = testing::heavy_core(3, 15, 2);
  const auto coarse = bench_graph(g, "core", 0.25, 4000, 1);
  const auto fine = bench_graph(g, "core", 0.125, 4000, 1);
  // ell goes from 3 to 4 and the predicted attempts scale with it.
  EXPECT_NEAR(fine.predicted_attempts / coarse.predicted_attempts, (4.0 / 3.0) * (0.75 / 0.875), 1e-12);
  EXPECT_NEAR(coarse.mean_attempts, coarse.expected_attempts, 4 * coarse.attempts_stderr);
  EXPECT_LE(coarse.expected_attempts, coarse.predicted_attempts);
}

TEST(Bench, FamilyParsing) {
  const auto fam = parse_bench_family("gnp:8");
  EXPECT_EQ(fam.name, "gnp");
  EXPECT_EQ(fam.parameter, 8.0);
  const Graph g = make_family_graph(fam, 500, 2);
  EXPECT_EQ(g.num_vertices(), 500u);
  EXPECT_NEAR(2.0 * g.num_edges() / 500.0, 8.0, 1.0);
  EXPECT_EQ(make_family_graph(parse_bench_family("star"), 10, 0).num_edges(), 9u);
  EXPECT_THROW(parse_bench_family("torus"), ParseError);
}

TEST(Bench, CsvOutput) {
  const std::vector<std::size_t> sizes{200, 400};
  const auto records = bench_scaling(parse_bench_family("gnp:6"), sizes, 0.25, 300, 5);
  ASSERT_EQ(records.size(), 2u);
  std::ostringstream out;
  write_bench_csv(out, records);
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  EXPECT_NE(header.find("complexity_ratio"), std::string::npos);
  int rows = 0;
  while (std::getline(lines, row)) rows += row.empty() ? 0 : 1;
  EXPECT_EQ(rows, 2);
  for (const auto& r : records) {
    EXPECT_GT(r.mean_queries, 0);
    EXPECT_GT(r.complexity_ratio, 0);
  }
}

}  // namespace
}  // namespace edgesamp
