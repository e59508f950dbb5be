#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hzeta {

/// Exact rational number p/q with gcd(|p|, q) = 1 and q >= 1.
///
/// Thin value type over GMP's mpq_class; every constructor canonicalizes, so
/// the invariant holds for every instance and equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
  explicit Rational(mpq_class value);

  /// Parses "p/q", an integer, or a decimal such as "-1.251" or "1e-9".
  /// Decimals are converted exactly (0.402 -> 201/500).
  static Rational parse(std::string_view text);

  /// The exact value of a finite binary double.
  static Rational from_double(double x);

  /// Best rational approximation of x with denominator <= max_den.
  static Rational approximate(double x, std::uint64_t max_den);

  /// 10^exponent for any integer exponent.
  static Rational pow10(int exponent);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  double to_double() const { return v_.get_d(); }
  /// Canonical "p/q"; "/1" is omitted for integers.
  std::string to_string() const;
  /// Fixed-point decimal rendering, truncated (not rounded) after `digits`.
  std::string to_decimal(int digits) const;

  Rational abs() const;
  Rational inverse() const;  // throws std::domain_error on zero
  Rational pow(int exponent) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational l, const Rational& r) { return l += r; }
  friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
  friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
  friend Rational operator/(Rational l, const Rational& r) { return l /= r; }

  friend bool operator==(const Rational& l, const Rational& r) {
    return cmp(l.v_, r.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
    const int c = cmp(l.v_, r.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Binomial coefficient C(n, k) as an exact integer.
mpz_class binomial(unsigned n, unsigned k);
mpz_class factorial(unsigned n);

}  // namespace hzeta
