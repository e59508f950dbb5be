#pragma once

#include <optional>
#include <utility>

#include "hzeta/exact/rational.hpp"
#include "hzeta/zeta.hpp"

namespace hzeta {

/// Float a is converted to the nearest rational with denominator <= 10^6.
inline constexpr std::uint64_t kMaxConversionDenominator = 1000000;
Rational to_exact_parameter(double a);

/// Real zero of zeta(., a) in (-N, -N+1), or its certified absence.
struct ZeroReport {
  int N = 0;
  Rational a;
  std::optional<double> a_input;  // set when a was converted from a float
  bool exists = false;
  double zero = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  double derivative = 0.0;  // central difference, h = 1e-6
  int simplicity_evidence = 0;
  double residual = 0.0;
};

/// B_N(a) B_{N+1}(a) < 0, decided exactly. Throws SignZero when either
/// factor vanishes and DomainError unless 0 < a < 1.
bool has_zero_in(int N, const Rational& a);

/// Brackets the zero between -N and -N+1 using the exact endpoint values
/// (sigma = 1 - 1e-6 stands in for the pole side when N = 0) and bisects to
/// width 1e-12. `exists` is false when the predicate fails.
ZeroReport locate_zero(int N, const Rational& a);
ZeroReport locate_zero(int N, double a);

struct ScanResult {
  int sign_changes = 0;
  int exact_zeros = 0;   // grid points where zeta evaluated to exactly 0
  int refinements = 0;   // local minima of |zeta| that were re-sampled
  double finest_step = 0.0;
};

/// Sign changes of zeta(., a) on the grid lo, lo+step, ..., hi. Every local
/// minimum of |zeta| without a sign change is re-sampled at halved steps
/// down to min_step, so tangential pairs of zeros are not missed.
ScanResult scan_sign_changes(const HurwitzZeta& zeta, double lo, double hi, double step,
                             double min_step = 1e-6);
int count_zeros_scan(double lo, double hi, double a, double step);

/// Exactly one zero in [-2M-2, -2M): exact checks at the integer points
/// -2M-2 and -2M-1 plus sign-change scans of the two open unit intervals.
bool corollary_check(int M, const Rational& a, double step = 1e-3);
/// Number of zeros counted by corollary_check.
int corollary_zero_count(int M, const Rational& a, double step = 1e-3);

enum class CrossingPattern { NegThenPos, PosThenNeg };

struct CrossingReport {
  int N = 0;
  Rational a;
  double x0 = 0.0;
  CrossingPattern pattern = CrossingPattern::NegThenPos;
  double residual = 0.0;        // |H_N(a, x0)|
  double search_limit = 0.0;    // right end of the grid that was scanned
  int grid_sign_changes = 0;
};

/// The unique positive zero x0 of x -> H_N(a, x) with the sign pattern around
/// it. The 10^4-point log grid spans (1e-8, 50); when H_N has not changed
/// sign by x = 50 the right end doubles (up to 1e5). Throws NoCrossing or
/// MultipleCrossings when the single-crossing picture fails.
CrossingReport x0_crossing(int N, const Rational& a);

struct MonotonicityReport {
  bool monotone = false;
  int direction = 0;  // +1 increasing, -1 decreasing
  double x0 = 0.0;
  double g_first = 0.0, g_last = 0.0;
};

/// g(sigma) = x0^{-sigma} Gamma(sigma) zeta(sigma, a) on 200 interior points
/// of (-N, -N+1); monotone within a relative noise of 1e-10.
MonotonicityReport monotonicity_report(int N, const Rational& a);
bool monotonicity_check(int N, const Rational& a);

/// |int_0^inf H_N(a,x) x^{sigma-1} dx - Gamma(sigma) zeta(sigma,a)| for
/// sigma in (-N, -N+1). Throws QuadratureNonConvergence.
double mellin_check(int N, const Rational& a, double sigma);

}  // namespace hzeta
