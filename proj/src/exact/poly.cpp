#include "hzeta/exact/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hzeta {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void RationalPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  approx_.resize(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), approx_.begin(),
                 [](const Rational& c) { return c.to_double(); });
}

RationalPoly RationalPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("RationalPoly::monomial: negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RationalPoly(std::move(v));
}

Rational RationalPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RationalPoly::operator()(const Rational& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x.raw();
    acc += it->raw();
  }
  return Rational(std::move(acc));
}

double RationalPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = approx_.rbegin(); it != approx_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::compose(const RationalPoly& q) const {
  RationalPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * q + RationalPoly::constant(*it);
  return acc;
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("RationalPoly::divmod: zero divisor");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {RationalPoly(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
  const Rational inv_lead = divisor.leading().inverse();
  for (int i = degree(); i >= dd; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> v(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), v.begin(), [](const Rational& c) { return -c; });
  return RationalPoly(std::move(v));
}

RationalPoly operator+(const RationalPoly& l, const RationalPoly& r) {
  std::vector<Rational> v(std::max(l.coeffs_.size(), r.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < l.coeffs_.size()) v[i] += l.coeffs_[i];
    if (i < r.coeffs_.size()) v[i] += r.coeffs_[i];
  }
  return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& l, const RationalPoly& r) { return l + (-r); }

RationalPoly operator*(const RationalPoly& l, const RationalPoly& r) {
  if (l.is_zero() || r.is_zero()) return {};
  std::vector<Rational> v(l.coeffs_.size() + r.coeffs_.size() - 1);
  for (std::size_t i = 0; i < l.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) v[i + j] += l.coeffs_[i] * r.coeffs_[j];
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const Rational& c, const RationalPoly& p) {
  std::vector<Rational> v(p.coeffs_.size());
  std::transform(p.coeffs_.begin(), p.coeffs_.end(), v.begin(),
                 [&](const Rational& x) { return c * x; });
  return RationalPoly(std::move(v));
}

std::string RationalPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (!unit || i == 0) out += mag.to_string();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace hzeta
