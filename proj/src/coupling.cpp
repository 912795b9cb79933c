#include "edgesamp/coupling.hpp"

#include <cmath>
#include <stdexcept>

#include "edgesamp/approx_sampler.hpp"
#include "edgesamp/classification.hpp"
#include "edgesamp/distance.hpp"
#include "edgesamp/enumeration.hpp"
#include "edgesamp/stats.hpp"

namespace edgesamp {

MaximalCoupling::MaximalCoupling(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("coupling needs distributions over the same index set");
  std::vector<double> common(p.size());
  std::vector<double> excess_p(p.size());
  std::vector<double> excess_q(p.size());
  bool any_p = false;
  bool any_q = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    common[i] = std::min(p[i], q[i]);
    overlap_ += common[i];
    excess_p[i] = p[i] - common[i];
    excess_q[i] = q[i] - common[i];
    any_p = any_p || excess_p[i] > 0;
    any_q = any_q || excess_q[i] > 0;
  }
  overlap_ = std::min(overlap_, 1.0);
  if (overlap_ > 0) common_.emplace(common);
  if (any_p && any_q && overlap_ < 1.0) {
    residual_p_.emplace(excess_p);
    residual_q_.emplace(excess_q);
  } else {
    overlap_ = 1.0;
  }
}

std::pair<std::size_t, std::size_t> MaximalCoupling::sample(Rng& rng) const {
  if (!residual_p_ || rng.uniform01() < overlap_) {
    const std::size_t i = common_->sample(rng);
    return {i, i};
  }
  return {residual_p_->sample(rng), residual_q_->sample(rng)};
}

DownstreamAlgorithm degree_sum_estimator_test(const Graph& g, double relative_tolerance) {
  double truth = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto d = static_cast<double>(g.degree(v));
    truth += d * d;
  }
  truth /= static_cast<double>(g.num_edges());
  return [&g, truth, relative_tolerance](std::span<const Edge> samples, std::uint64_t) {
    double sum = 0;
    for (const Edge& e : samples) sum += static_cast<double>(g.degree(e.u) + g.degree(e.v));
    const double estimate = sum / static_cast<double>(samples.size());
    return std::abs(estimate - truth) <= relative_tolerance * truth;
  };
}

CouplingReport coupled_run(const DownstreamAlgorithm& algorithm, const Graph& g, const CouplingOptions& options) {
  if (options.k == 0 || options.trials == 0) throw std::invalid_argument("coupled_run needs k >= 1 and trials >= 1");
  if (g.num_edges() == 0) throw std::invalid_argument("coupled_run needs a graph with edges");
  const auto cls = classify(g, options.m_est.value_or(g.num_edges()));
  const EdgeDistribution approx =
      exact_attempt_distribution<double>(g, cls, ell_of(options.epsilon), {200, 64}).condition();
  const EdgeDistribution uniform = uniform_edge_distribution<double>(g);
  const MaximalCoupling coupling(approx.mass, uniform.mass);

  CouplingReport report;
  report.tv_analytic = tv_distance(approx, uniform);
  report.pointwise_analytic = pointwise_distance(approx, uniform);
  report.k = options.k;
  report.trials = options.trials;

  Rng rng(options.seed);
  std::vector<Edge> approx_stream(options.k);
  std::vector<Edge> uniform_stream(options.k);
  std::uint64_t streams_differ = 0;
  std::uint64_t accepted_uniform = 0;
  std::uint64_t accepted_approx = 0;
  for (std::size_t t = 0; t < options.trials; ++t) {
    bool differ = false;
    for (std::size_t i = 0; i < options.k; ++i) {
      const auto [x, y] = coupling.sample(rng);
      approx_stream[i] = g.directed_edge(x).undirected();
      uniform_stream[i] = g.directed_edge(y).undirected();
      if (x != y) {
        ++report.disagreements;
        differ = true;
      }
    }
    report.draws += options.k;
    streams_differ += differ ? 1 : 0;
    const std::uint64_t aux = rng();
    accepted_uniform += algorithm(uniform_stream, aux) ? 1 : 0;
    accepted_approx += algorithm(approx_stream, aux) ? 1 : 0;
  }

  const auto rate = [](std::uint64_t hits, std::uint64_t total) {
    return static_cast<double>(hits) / static_cast<double>(total);
  };
  const auto bernoulli_stderr = [](double p, std::uint64_t total) {
    return std::sqrt(p * (1 - p) / static_cast<double>(total));
  };
  report.per_query_disagreement = rate(report.disagreements, report.draws);
  report.per_query_stderr = bernoulli_stderr(report.tv_analytic, report.draws);
  report.stream_difference = rate(streams_differ, options.trials);
  const double stream_exact = 1.0 - std::pow(1.0 - report.tv_analytic, static_cast<double>(options.k));
  report.stream_stderr = bernoulli_stderr(stream_exact, options.trials);
  report.success_uniform = rate(accepted_uniform, options.trials);
  report.success_approx = rate(accepted_approx, options.trials);
  report.downstream_divergence = std::abs(report.success_uniform - report.success_approx);
  // Identical streams and aux seeds give identical outputs, so the outputs
  // can only differ on trials where the streams did.
  if (report.downstream_divergence > report.stream_difference + 1e-12) {
    throw std::logic_error("downstream algorithm is not deterministic in its inputs");
  }
  return report;
}

}  // namespace edgesamp
