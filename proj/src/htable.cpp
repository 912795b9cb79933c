#include "edgesamp/htable.hpp"

#include <algorithm>
#include <cmath>

namespace edgesamp {

namespace {

template <class T, class Exceeds>
HBoundReport check_bounds_impl(const BasicHTable<T>& table, const EdgeClassification& cls, Exceeds exceeds) {
  HBoundReport report;
  for (Vertex v = 0; v < table.num_vertices(); ++v) {
    if (!cls.is_heavy[v]) continue;
    ++report.heavy_vertices;
    if (exceeds(table.at(v, 1), T(1) / T(2))) ++report.first_level_violations;
    T bound(1);
    for (int i = 1; i <= table.levels(); ++i) {
      bound /= T(2);
      if (exceeds(table.at(v, i), bound)) ++report.level_violations;
      report.worst_scaled = std::max(report.worst_scaled, std::ldexp(to_double(table.at(v, i)), i));
    }
  }
  return report;
}

}  // namespace

HBoundReport check_h_bounds(const HTable& table, const EdgeClassification& cls, double slack) {
  return check_bounds_impl(table, cls, [slack](double value, double bound) { return value > bound + slack; });
}

HBoundReport check_h_bounds(const RationalHTable& table, const EdgeClassification& cls) {
  return check_bounds_impl(table, cls, [](const Rational& value, const Rational& bound) { return value > bound; });
}

double max_h(const HTable& table, int level) {
  auto row = table.level(level);
  return row.empty() ? 0.0 : *std::max_element(row.begin(), row.end());
}

}  // namespace edgesamp
