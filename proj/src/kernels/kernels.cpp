#include "hzeta/kernels.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "hzeta/errors.hpp"
#include "hzeta/exact/bernoulli.hpp"

namespace hzeta {
namespace {

const RationalPoly& one_minus_a() {
  static const RationalPoly p({Rational(1), Rational(-1)});
  return p;
}

Rational inv_factorial(unsigned n) { return Rational(mpz_class(1), factorial(n)); }

Rational binom(unsigned n, unsigned k) { return Rational(binomial(n, k), 1); }

void check_order(int N) {
  if (N < 0) throw std::invalid_argument("kernel order N must be >= 0");
}

void check_domain(double a, double x) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("a must lie in (0,1)");
  if (!(x > 0.0)) throw DomainError("x must be > 0");
}

// sum_{k=0}^{upper} C(N+1,k) B_{first+k}(1-a); empty when upper < 0.
RationalPoly binomial_bernoulli_sum(int N, int first, int upper) {
  RationalPoly acc;
  for (int k = 0; k <= upper; ++k)
    acc = acc + binom(static_cast<unsigned>(N + 1), static_cast<unsigned>(k)) *
                    bernoulli_reflected(static_cast<unsigned>(first + k));
  return acc;
}

}  // namespace

RationalPoly bernoulli_reflected(unsigned n) { return bernoulli_poly(n).compose(one_minus_a()); }

RationalPoly CoeffFamily::in_x(const Rational& a) const {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& p : coeffs) c.push_back(p(a));
  return RationalPoly(std::move(c));
}

double CoeffFamily::eval(double a, double x) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + (*it)(a);
  return acc;
}

double ExpPolyForm::eval(double a, double x) const {
  double acc = 0.0;
  for (auto it = poly_part.rbegin(); it != poly_part.rend(); ++it) acc = acc * x + (*it)(a);
  return constant(a) - std::exp(a * x) * acc;
}

RationalPoly ExpPolyForm::at_zero() const {
  return poly_part.empty() ? constant : constant - poly_part.front();
}

ExpPolyForm build_first_derivative_form(int N) {
  check_order(N);
  // S_j(a) = sum_{k=0}^{N-j} C(N+1,k) B_{j+k}(1-a), j = 0..N+1
  std::vector<RationalPoly> S;
  for (int j = 0; j <= N + 1; ++j) S.push_back(binomial_bernoulli_sum(N, j, N - j));

  ExpPolyForm form;
  RationalPoly power = RationalPoly::constant(Rational(1));
  for (int i = 0; i <= N; ++i) power = power * one_minus_a();
  form.constant = power;

  const RationalPoly a = RationalPoly::identity();
  for (int j = 0; j <= N; ++j) {
    const Rational w = inv_factorial(static_cast<unsigned>(j));
    form.poly_part.push_back(w * (S[static_cast<std::size_t>(j + 1)] + a * S[static_cast<std::size_t>(j)]));
  }
  return form;
}

CoeffFamily differentiate_form(const ExpPolyForm& form, int N) {
  // d/dx [c - e^{ax} sum q_j x^j] = -e^{ax} sum (a q_j + (j+1) q_{j+1}) x^j
  const RationalPoly a = RationalPoly::identity();
  const auto& q = form.poly_part;
  CoeffFamily fam;
  fam.N = N;
  fam.source = "x-derivative of the first-derivative form";
  for (std::size_t j = 0; j < q.size(); ++j) {
    RationalPoly c = a * q[j];
    if (j + 1 < q.size()) c = c + Rational(static_cast<long>(j + 1)) * q[j + 1];
    fam.coeffs.push_back(-c);
  }
  return fam;
}

namespace {

CoeffFamily coefficient_family_from_formula(int N) {
  const RationalPoly a = RationalPoly::identity();
  const RationalPoly a2 = a * a;
  CoeffFamily fam;
  fam.N = N;
  fam.source = "coefficient formula for P_N(a,x)";
  for (int m = 0; m <= N; ++m) {
    const RationalPoly s2 = binomial_bernoulli_sum(N, m + 2, N - 2 - m);
    const RationalPoly s1 = binomial_bernoulli_sum(N, m + 1, N - 1 - m);
    const RationalPoly s0 = binomial_bernoulli_sum(N, m, N - m);
    RationalPoly c = -inv_factorial(static_cast<unsigned>(m)) * (s2 + Rational(2) * a * s1 + a2 * s0);
    if (c.degree() != N + 2)
      throw std::logic_error("C_{N,m} has unexpected degree " + std::to_string(c.degree()));
    fam.coeffs.push_back(std::move(c));
  }
  return fam;
}

}  // namespace

const CoeffFamily& build_coefficient_family(int N) {
  check_order(N);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const CoeffFamily>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[N];
  if (!slot) slot = std::make_unique<const CoeffFamily>(coefficient_family_from_formula(N));
  return *slot;
}

MellinKernel::MellinKernel(int N, double a) : n_(N), a_(a) {
  check_order(N);
  if (!(a > 0.0 && a < 1.0)) throw DomainError("a must lie in (0,1)");
  // B_n(y)/n! = sum_k (B_k/k!) y^{n-k}/(n-k)!, y = 1-a; no large cancellation.
  const int top = N + kSeriesTerms;
  std::vector<double> b(static_cast<std::size_t>(top) + 1), ypow(static_cast<std::size_t>(top) + 1);
  const double y = 1.0 - a;
  ypow[0] = 1.0;
  for (int j = 0; j <= top; ++j) {
    b[static_cast<std::size_t>(j)] = bernoulli_over_factorial(static_cast<unsigned>(j));
    if (j > 0) ypow[static_cast<std::size_t>(j)] = ypow[static_cast<std::size_t>(j - 1)] * y / j;
  }
  coeff_.resize(static_cast<std::size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) {
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += b[static_cast<std::size_t>(k)] * ypow[static_cast<std::size_t>(n - k)];
    coeff_[static_cast<std::size_t>(n)] = s;
  }
}

double MellinKernel::series(double x) const {
  // sum_{n=N+1}^{N+40} c_n x^{n-1}, Horner from the top
  double acc = 0.0;
  for (int n = n_ + kSeriesTerms; n > n_; --n) acc = acc * x + coeff_[static_cast<std::size_t>(n)];
  return acc * std::pow(x, n_);
}

double MellinKernel::polynomial_part(double x) const {
  double acc = 0.0;
  for (int n = n_; n >= 0; --n) acc = acc * x + coeff_[static_cast<std::size_t>(n)];
  return acc / x;
}

double MellinKernel::direct(double x) const {
  // e^{(1-a)x}/(e^x-1) = e^{-ax}/(1-e^{-x})
  return std::exp(-a_ * x) / -std::expm1(-x) - polynomial_part(x);
}

double MellinKernel::operator()(double x) const {
  check_domain(a_, x);
  return x < kSeriesSwitch ? series(x) : direct(x);
}

double MellinKernel::mellin_integrand(double x, double sigma) const {
  if (x < kSeriesSwitch) {
    double acc = 0.0;
    for (int n = n_ + kSeriesTerms; n > n_; --n) acc = acc * x + coeff_[static_cast<std::size_t>(n)];
    // x^{N} * x^{sigma-1}; exponent > -1 on the strip
    return acc * std::pow(x, n_ + sigma - 1.0);
  }
  return direct(x) * std::pow(x, sigma - 1.0);
}

double mellin_kernel(int N, double a, double x) {
  check_domain(a, x);
  return MellinKernel(N, a)(x);
}

double scaled_kernel(int N, double a, double x) {
  check_domain(a, x);
  if (x > 700.0) throw DomainError("x too large for h_N in binary64");
  return x * std::expm1(x) * MellinKernel(N, a)(x);
}

std::vector<Rational> scaled_kernel_taylor(int N, const Rational& a, int order) {
  check_order(N);
  // h_N = x e^{bx} - (e^x - 1) Q(x),  b = 1-a,  Q = sum_{n<=N} B_n(b)/n! x^n
  const Rational b = Rational(1) - a;
  std::vector<Rational> q;
  for (int n = 0; n <= N; ++n)
    q.push_back(bernoulli_poly(static_cast<unsigned>(n))(b) * inv_factorial(static_cast<unsigned>(n)));
  std::vector<Rational> out;
  for (int k = 0; k <= order; ++k) {
    Rational c;
    if (k >= 1) c = b.pow(k - 1) * inv_factorial(static_cast<unsigned>(k - 1));
    for (int n = 0; n <= std::min(N, k - 1); ++n)
      c -= q[static_cast<std::size_t>(n)] * inv_factorial(static_cast<unsigned>(k - n));
    out.push_back(std::move(c));
  }
  return out;
}

CoefficientPolyEvaluator::CoefficientPolyEvaluator(int N, double a) {
  const CoeffFamily& fam = build_coefficient_family(N);
  for (const auto& c : fam.coeffs) coeff_.push_back(c(a));
}

double CoefficientPolyEvaluator::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double eval_coefficient_poly(int N, double a, double x) { return CoefficientPolyEvaluator(N, a)(x); }

}  // namespace hzeta
