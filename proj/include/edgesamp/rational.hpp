#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace edgesamp {

// Exact arithmetic for the small-graph oracles.
using Rational = boost::multiprecision::cpp_rational;

template <class T>
T make_ratio(std::uint64_t num, std::uint64_t den) {
  return T(num) / T(den);
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace edgesamp
