#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hzeta/errors.hpp"
#include "hzeta/exact/bernoulli.hpp"
#include "hzeta/zeta.hpp"

namespace hzeta {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// sin(pi x) with the argument reduced to [-1/2, 1/2] first.
double sin_pi(double x) {
  double r = x - 2.0 * std::nearbyint(x / 2.0);  // [-1, 1]
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

double lanczos(double x) {
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

}  // namespace

double gamma_real(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma_real: non-finite argument");
  if (x <= 0.0 && x == std::floor(x)) throw PoleError("gamma_real at " + std::to_string(x));
  if (x < 0.5) return std::numbers::pi / (sin_pi(x) * lanczos(1.0 - x));
  return lanczos(x);
}

Rational zeta_at_nonpositive_integer(int N, const Rational& a) {
  if (N < 0) throw DomainError("N must be >= 0");
  if (a.sign() <= 0 || a > Rational(1)) throw DomainError("a must lie in (0,1]");
  return -bernoulli_poly(static_cast<unsigned>(N + 1))(a) / Rational(N + 1);
}

}  // namespace hzeta
