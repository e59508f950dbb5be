#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <string>

#include "hzeta/errors.hpp"
#include "hzeta/kernels.hpp"
#include "hzeta/zeros.hpp"

namespace hzeta {
namespace {

constexpr double kSplit = MellinKernel::kSeriesSwitch;
constexpr double kTruncation = 80.0;
constexpr double kQuadratureTolerance = 1e-13;
constexpr double kAcceptedError = 1e-10;

void accept(double estimate, double value, const char* piece) {
  if (!std::isfinite(value) || estimate > kAcceptedError * std::max(1.0, std::abs(value)))
    throw QuadratureNonConvergence(std::string(piece) + ": error estimate " + std::to_string(estimate));
}

}  // namespace

double mellin_check(int N, const Rational& a, double sigma) {
  if (!(sigma > -N && sigma < -N + 1))
    throw DomainError("sigma must lie in (-N, -N+1)");
  const double ad = a.to_double();
  const MellinKernel kernel(N, ad);
  auto integrand = [&](double x) { return kernel.mellin_integrand(x, sigma); };

  // (0, 1/2]: series branch, integrable x^{N+sigma-1} singularity at 0
  boost::math::quadrature::tanh_sinh<double> near_zero;
  double err = 0.0;
  const double head = near_zero.integrate(integrand, 0.0, kSplit, kQuadratureTolerance, &err);
  accept(err, head, "head");

  const double body = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, kSplit, kTruncation, 20, kQuadratureTolerance, &err);
  accept(err, body, "body");

  // Beyond the truncation point the exponential part is integrated
  // numerically and the polynomial part in closed form:
  //   int_X^inf x^{n+sigma-2} dx = X^{n+sigma-1} / (1-n-sigma).
  boost::math::quadrature::exp_sinh<double> to_infinity;
  auto exp_part = [&](double x) {
    return std::exp(-ad * x) / -std::expm1(-x) * std::pow(x, sigma - 1.0);
  };
  double tail = to_infinity.integrate(exp_part, kTruncation, std::numeric_limits<double>::infinity(),
                                      kQuadratureTolerance, &err);
  accept(err, tail, "tail");
  for (int n = 0; n <= N; ++n)
    tail -= kernel.reflected_coefficient(n) * std::pow(kTruncation, n + sigma - 1.0) / (1.0 - n - sigma);

  const double integral = head + body + tail;
  const double reference = gamma_real(sigma) * HurwitzZeta(ad)(sigma);
  return std::abs(integral - reference);
}

}  // namespace hzeta
