#pragma once

#include <string>
#include <vector>

#include "hzeta/exact/poly.hpp"
#include "hzeta/exact/rational.hpp"

// Kernels of the strip-wise Mellin representation
//
//   Gamma(s) zeta(s,a) = int_0^inf H_N(a,x) x^{s-1} dx,   -N < Re s < -N+1,
//   H_N(a,x) = e^{(1-a)x}/(e^x-1) - sum_{n<=N} B_n(1-a)/n! x^{n-1},
//
// together with h_N = x(e^x-1)H_N, the form of d/dx f_N where
// f_N = e^{(a-1)x} d^{N+1}/dx^{N+1} h_N, and the polynomial
// P_N(a,x) = e^{-ax} d^2/dx^2 f_N = sum_m C_{N,m}(a) x^m.
//
// Everything that is polynomial in a is built exactly as a RationalPoly in a.

namespace hzeta {

/// B_n(1-a) expanded as a polynomial in a (binomial composition).
RationalPoly bernoulli_reflected(unsigned n);

/// The coefficients C_{N,0}(a), ..., C_{N,N}(a) of P_N(a,x) as polynomials in a.
struct CoeffFamily {
  int N = 0;
  std::vector<RationalPoly> coeffs;  // index m holds C_{N,m}
  std::string source;                // how the family was derived

  const RationalPoly& operator[](int m) const { return coeffs.at(static_cast<std::size_t>(m)); }
  /// P_N(a, x) as an exact polynomial in x for fixed rational a.
  RationalPoly in_x(const Rational& a) const;
  double eval(double a, double x) const;
};

/// Expression c(a) - e^{ax} sum_m q_m(a) x^m with polynomial c and q_m.
struct ExpPolyForm {
  RationalPoly constant;
  std::vector<RationalPoly> poly_part;

  double eval(double a, double x) const;
  /// Value at x = 0 as a polynomial in a: c(a) - q_0(a).
  RationalPoly at_zero() const;
};

/// d/dx f_N(a,x) in closed form.
ExpPolyForm build_first_derivative_form(int N);

/// C_{N,m}(a) straight from the coefficient formula. The result is cached per
/// N, so the returned reference stays valid for the program's lifetime.
const CoeffFamily& build_coefficient_family(int N);

/// e^{-ax} d/dx of an ExpPolyForm, returned as the x-coefficients. Applied
/// to build_first_derivative_form(N) this gives C_{N,m} by a second route.
CoeffFamily differentiate_form(const ExpPolyForm& form, int N);

/// Float evaluation of H_N(a, .) for fixed (N, a).
/// Below the switch point the Taylor branch sum_{n>N} B_n(1-a)/n! x^{n-1}
/// (40 terms) is used; above it the closed form.
class MellinKernel {
 public:
  static constexpr double kSeriesSwitch = 0.5;
  static constexpr int kSeriesTerms = 40;

  MellinKernel(int N, double a);

  int N() const { return n_; }
  double a() const { return a_; }

  double operator()(double x) const;
  double series(double x) const;
  double direct(double x) const;
  /// H_N(a,x) x^{sigma-1}, without overflow for tiny x on the series branch.
  double mellin_integrand(double x, double sigma) const;
  /// The polynomial part sum_{n<=N} B_n(1-a)/n! x^{n-1}.
  double polynomial_part(double x) const;
  /// B_n(1-a)/n!
  double reflected_coefficient(int n) const { return coeff_.at(static_cast<std::size_t>(n)); }

 private:
  int n_;
  double a_;
  std::vector<double> coeff_;
};

/// H_N(a, x); throws DomainError unless 0 < a < 1 and x > 0.
double mellin_kernel(int N, double a, double x);

/// h_N(a, x) = x (e^x - 1) H_N(a, x).
double scaled_kernel(int N, double a, double x);

/// Exact Taylor coefficients [x^0 .. x^order] of h_N(a, x) at rational a.
std::vector<Rational> scaled_kernel_taylor(int N, const Rational& a, int order);

/// P_N(a, .) with the coefficients floated once for a fixed (N, a).
class CoefficientPolyEvaluator {
 public:
  CoefficientPolyEvaluator(int N, double a);
  double operator()(double x) const;
  const std::vector<double>& coefficients() const { return coeff_; }

 private:
  std::vector<double> coeff_;
};

/// P_N(a, x).
double eval_coefficient_poly(int N, double a, double x);

}  // namespace hzeta
