#include "hzeta/exact/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "hzeta/errors.hpp"

namespace hzeta {

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) {
  if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::pow10(int exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  return exponent >= 0 ? Rational(p, 1) : Rational(mpz_class(1), p);
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { throw ParseError("not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num, den;
    const std::string n(text.substr(0, slash)), d(text.substr(slash + 1));
    if (n.empty() || d.empty() || d.front() == '+' || d.front() == '-') fail();
    if (num.set_str(n.front() == '+' ? n.substr(1) : n, 10) != 0) fail();
    if (den.set_str(d, 10) != 0) fail();
    if (den == 0) fail();
    return {num, den};
  }

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  std::string digits;
  int scale = 0;
  bool seen_point = false, seen_digit = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) fail();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') fail();
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
    if (i == text.size()) fail();
    int exponent = 0;
    for (; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') fail();
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 100000) fail();
    }
    scale += exp_negative ? -exponent : exponent;
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  return Rational(mantissa, 1) * pow10(scale);
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Rational::from_double: non-finite");
  mpq_class q(x);  // exact for finite doubles
  return Rational(q);
}

Rational Rational::approximate(double x, std::uint64_t max_den) {
  if (max_den == 0) throw std::invalid_argument("Rational::approximate: max_den must be >= 1");
  const Rational exact = from_double(x);
  if (exact.den() <= max_den) return exact;

  // Continued-fraction convergents h/k; stop before k exceeds max_den and then
  // take the best semiconvergent.
  const mpz_class limit(std::to_string(max_den));
  mpz_class p = exact.num(), q = exact.den();
  mpz_class h = 1, h_prev = 0, k = 0, k_prev = 1;
  while (q != 0) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    const mpz_class k_next = a * k + k_prev;
    if (k_next > limit) {
      const mpz_class n = (limit - k_prev) / k;
      const Rational semi(n * h + h_prev, n * k + k_prev);
      const Rational conv(h, k);
      return (semi - exact).abs() < (conv - exact).abs() ? semi : conv;
    }
    const mpz_class h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    const mpz_class r = p - a * q;
    p = q;
    q = r;
  }
  return Rational(h, k);
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  mpz_class scaled = abs().num() * pow10(digits).num() / den();  // truncates
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return (sign() < 0 ? "-" : "") + s;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational::inverse: zero");
  return Rational(den(), num());
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace hzeta
