#pragma once

#include <vector>

#include "hzeta/exact/rational.hpp"

namespace hzeta {

/// Gamma on the real line; poles at the non-positive integers raise PoleError.
/// Lanczos (g = 7, 9 terms) for x >= 1/2, reflection below.
double gamma_real(double x);

/// zeta(-N, a) = -B_{N+1}(a) / (N+1), exact.
Rational zeta_at_nonpositive_integer(int N, const Rational& a);

/// Real-axis Hurwitz zeta zeta(sigma, a) for a fixed 0 < a <= 1.
///
/// Euler-Maclaurin with K = 12 correction terms. The shift M is the smallest
/// value for which the remainder bound
///   |B_2K|/(2K)! |(s)_2K| (M+a)^{1-sigma-2K} / (sigma+2K-1)
/// is below 1e-16. The sum runs in long double; when the rounding estimate
/// of the partial sums exceeds 1e-13 it is redone in __float128.
class HurwitzZeta {
 public:
  static constexpr int kCorrectionTerms = 12;

  struct Evaluation {
    double value = 0.0;
    double remainder_bound = 0.0;
    double rounding_estimate = 0.0;
    int shift = 0;
    bool extended_precision = false;
  };

  explicit HurwitzZeta(double a);

  double a() const { return a_; }
  double operator()(double sigma) const { return evaluate(sigma).value; }
  Evaluation evaluate(double sigma) const;

 private:
  double a_;
  std::vector<long double> log_shift_;  // log(n + a)
};

/// One-shot evaluation; throws PoleError at sigma = 1, DomainError unless 0 < a <= 1.
double hurwitz_zeta(double sigma, double a);

}  // namespace hzeta
