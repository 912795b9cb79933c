#include "edgesamp/emulation.hpp"

#include <stdexcept>

namespace edgesamp {

ExtendedOracle make_extended(QueryOracle& base, const EdgeSourceSpec& spec, const Graph* full_access) {
  ExtendedOracle out(base, spec.kind);
  const auto n = static_cast<double>(base.num_vertices());
  switch (spec.kind) {
    case EdgeSourceKind::TrueUniform:
      if (full_access == nullptr) throw std::invalid_argument("true uniform edge source needs full graph access");
      if (full_access->num_edges() == 0) throw std::invalid_argument("graph has no edges");
      out.graph_ = full_access;
      break;
    case EdgeSourceKind::Approximate: {
      const double eps = spec.accuracy.value_or(std::min(0.5, 1.0 / (n * n)));
      out.approx_ = make_sampler_config(eps, base.num_vertices(), base.declared_edges());
      break;
    }
    case EdgeSourceKind::Exact:
      if (full_access == nullptr) throw std::invalid_argument("exact edge source needs full graph access");
      out.graph_ = full_access;
      out.exact_ = std::make_shared<const ExactSampler>(*full_access, base.declared_edges(), spec.accuracy);
      break;
  }
  return out;
}

Edge ExtendedOracle::random_edge() {
  ++random_edges_;
  switch (kind_) {
    case EdgeSourceKind::TrueUniform:
      return graph_->edges()[base_->rng().uniform_index(graph_->num_edges())];
    case EdgeSourceKind::Approximate:
      return sample_edge(*base_, approx_).edge;
    case EdgeSourceKind::Exact:
      return exact_->sample(*base_).edge;
  }
  throw std::logic_error("unknown edge source");
}

}  // namespace edgesamp
