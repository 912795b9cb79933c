#include "edgesamp/exact_sampler.hpp"


#include "edgesamp/classification.hpp"

namespace edgesamp {

CorrectionDistribution::CorrectionDistribution(BasicCorrectionWeights<double> weights)
    : weights_(std::move(weights)), index_(weights_.r) {}

CorrectionDistribution build_correction(const Graph& g, const HTable& ht, double delta) {
  return CorrectionDistribution(correction_weights(g, ht, delta));
}

CorrectionDistribution build_correction(const Graph& g, double delta) {
  const auto cls = classify(g, g.num_edges());
  const auto ht = compute_h<double>(g, cls, ell_for(delta));
  return build_correction(g, ht, delta);
}

double default_delta(std::size_t n) {
  const double nd = static_cast<double>(n);
  const double delta = 1.0 / (nd * nd * nd);
  return (n <= 1 || delta > 0.5) ? 0.5 : delta;
}

ExactSampler::ExactSampler(const Graph& g, std::size_t m_est, std::optional<double> delta,
                           std::optional<std::uint64_t> max_attempts)
    : graph_(&g), lazy_(std::make_shared<LazyCorrection>()) {
  if (m_est != g.num_edges()) {
    throw std::invalid_argument("exact sampling needs the true edge count (declared " + std::to_string(m_est) +
                                ", actual " + std::to_string(g.num_edges()) + ")");
  }
  config_ = make_sampler_config(delta ? *delta : default_delta(g.num_vertices()), g.num_vertices(), m_est,
                                max_attempts);
}

const CorrectionDistribution& ExactSampler::correction() const {
  std::call_once(lazy_->once, [this] {
    lazy_->table = std::make_unique<CorrectionDistribution>(build_correction(*graph_, config_.epsilon));
  });
  return *lazy_->table;
}

bool ExactSampler::correction_built() const {
  // Only meaningful once no other thread is inside correction().
  return lazy_->table != nullptr;
}

EdgeSample ExactSampler::sample(QueryOracle& oracle) const {
  if (oracle.declared_edges() != graph_->num_edges() || oracle.num_vertices() != graph_->num_vertices()) {
    throw std::invalid_argument("oracle does not match the exact sampler's graph");
  }
  if (!oracle.rng().bernoulli(config_.epsilon)) return sample_edge(oracle, config_);
  const std::size_t slot = correction().sample_slot(oracle.rng());
  EdgeSample out;
  out.directed = graph_->directed_edge(slot);
  out.edge = out.directed.undirected();
  out.corrected = true;
  return out;
}

EdgeSample sample_exactly(QueryOracle& oracle, const Graph& g, std::optional<double> delta) {
  return ExactSampler(g, oracle.declared_edges(), delta).sample(oracle);
}

}  // namespace edgesamp
