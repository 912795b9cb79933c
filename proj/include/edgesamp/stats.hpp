#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace edgesamp {

// Welford running mean/variance.
class RunningStats {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  std::uint64_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const { return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0; }
  double standard_error() const {
    return count_ > 0 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0;
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Upper quantile of the standard normal: z with P[Z > z] = alpha.
double normal_upper_quantile(double alpha);

// Wilson-Hilferty approximation of the chi-square upper-alpha critical value
// with dof degrees of freedom.
double chi_square_critical(std::size_t dof, double alpha);

struct ChiSquareResult {
  double statistic = 0;
  std::size_t dof = 0;
  double critical = 0;
  bool reject = false;
};

// Goodness of fit of counts against uniform cell probabilities. Requires a
// total count of at least 10 per cell; throws std::invalid_argument otherwise.
ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> counts, double alpha);

// Against arbitrary cell probabilities (summing to 1). Cells with zero
// expectation must be empty; every positive expected count must be >= 5.
ChiSquareResult chi_square_fit(std::span<const std::uint64_t> counts, std::span<const double> probabilities,
                               double alpha);

// P[X >= k] for X ~ Binomial(n, p).
double binomial_upper_tail(std::uint64_t n, double p, std::uint64_t k);

}  // namespace edgesamp
