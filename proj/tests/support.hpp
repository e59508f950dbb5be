#pragma once

#include <cmath>
#include <random>

#include "hzeta/exact/rational.hpp"

namespace testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eedu);
  return gen;
}

/// p/q with q in [1, max_den], uniformly placed in (lo, hi).
inline hzeta::Rational random_rational(double lo, double hi, long max_den = 100000) {
  std::uniform_int_distribution<long> den(2, max_den);
  const long q = den(rng());
  const long first = static_cast<long>(std::floor(lo * q)) + 1;
  const long last = static_cast<long>(std::ceil(hi * q)) - 1;
  std::uniform_int_distribution<long> num(first, std::max(first, last));
  return hzeta::Rational(num(rng()), q);
}

inline bool close_rel(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

/// Rounds to `digits` significant figures.
inline double round_sig(double x, int digits) {
  if (x == 0.0) return 0.0;
  const double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(x)))));
  return std::round(x * scale) / scale;
}

}  // namespace testing
