#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hzeta/exact/rational.hpp"

namespace hzeta {

/// Univariate polynomial with exact rational coefficients, index = degree.
///
/// Canonical form has no trailing zero coefficient; the zero polynomial has
/// no coefficients and degree -1. A binary64 copy of the coefficients is kept
/// alongside so float evaluation does not touch GMP.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<Rational> coeffs)
      : RationalPoly(std::vector<Rational>(coeffs)) {}

  static RationalPoly constant(const Rational& c) { return RationalPoly({c}); }
  static RationalPoly monomial(const Rational& c, int degree);
  /// The polynomial x.
  static RationalPoly identity() { return RationalPoly({Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  /// Horner evaluation, exact.
  Rational operator()(const Rational& x) const;
  /// Horner evaluation on the binary64 coefficient copy.
  double operator()(double x) const;
  /// Sign of p(x), exact.
  int sign_at(const Rational& x) const { return (*this)(x).sign(); }

  RationalPoly derivative() const;
  /// p(q(x)).
  RationalPoly compose(const RationalPoly& q) const;
  /// Euclidean division: *this = quotient * divisor + remainder.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& divisor) const;

  RationalPoly operator-() const;
  friend RationalPoly operator+(const RationalPoly& l, const RationalPoly& r);
  friend RationalPoly operator-(const RationalPoly& l, const RationalPoly& r);
  friend RationalPoly operator*(const RationalPoly& l, const RationalPoly& r);
  friend RationalPoly operator*(const Rational& c, const RationalPoly& p);
  friend RationalPoly operator*(const RationalPoly& p, const Rational& c) { return c * p; }

  friend bool operator==(const RationalPoly& l, const RationalPoly& r) {
    return l.coeffs_ == r.coeffs_;
  }

  /// Human-readable form such as "x^2 - x + 1/6".
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
  std::vector<double> approx_;
};

inline RationalPoly derivative(const RationalPoly& p) { return p.derivative(); }

}  // namespace hzeta
