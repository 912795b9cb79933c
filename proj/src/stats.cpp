#include "edgesamp/stats.hpp"

#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/normal.hpp>

namespace edgesamp {

double normal_upper_quantile(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  return boost::math::quantile(boost::math::complement(boost::math::normal(), alpha));
}

double chi_square_critical(std::size_t dof, double alpha) {
  if (dof == 0) throw std::invalid_argument("chi-square needs at least one degree of freedom");
  const double k = static_cast<double>(dof);
  const double z = normal_upper_quantile(alpha);
  const double c = 2.0 / (9.0 * k);
  const double base = 1.0 - c + z * std::sqrt(c);
  return k * base * base * base;
}

ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> counts, double alpha) {
  if (counts.size() < 2) throw std::invalid_argument("chi-square needs at least two cells");
  const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (total < 10 * counts.size()) {
    throw std::invalid_argument("chi-square needs at least 10 observations per cell");
  }
  const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  ChiSquareResult out;
  for (std::uint64_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    out.statistic += d * d / expected;
  }
  out.dof = counts.size() - 1;
  out.critical = chi_square_critical(out.dof, alpha);
  out.reject = out.statistic > out.critical;
  return out;
}

ChiSquareResult chi_square_fit(std::span<const std::uint64_t> counts, std::span<const double> probabilities,
                               double alpha) {
  if (counts.size() != probabilities.size()) throw std::invalid_argument("counts and probabilities differ in size");
  const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  ChiSquareResult out;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = probabilities[i] * static_cast<double>(total);
    if (probabilities[i] == 0.0) {
      if (counts[i] != 0) {
        out.statistic = std::numeric_limits<double>::infinity();
        out.reject = true;
      }
      continue;
    }
    if (expected < 5.0) throw std::invalid_argument("chi-square needs an expected count of at least 5 per cell");
    const double d = static_cast<double>(counts[i]) - expected;
    out.statistic += d * d / expected;
    ++cells;
  }
  if (cells < 2) throw std::invalid_argument("chi-square needs at least two cells");
  out.dof = cells - 1;
  out.critical = chi_square_critical(out.dof, alpha);
  out.reject = out.reject || out.statistic > out.critical;
  return out;
}

double binomial_upper_tail(std::uint64_t n, double p, std::uint64_t k) {
  if (k == 0) return 1.0;
  if (k > n) return 0.0;
  const boost::math::binomial dist(static_cast<double>(n), p);
  return boost::math::cdf(boost::math::complement(dist, static_cast<double>(k - 1)));
}

}  // namespace edgesamp
