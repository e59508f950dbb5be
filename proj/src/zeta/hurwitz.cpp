#include <quadmath.h>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hzeta/errors.hpp"
#include "hzeta/exact/bernoulli.hpp"
#include "hzeta/zeta.hpp"

namespace hzeta {
namespace {

using quad = __float128;

constexpr int kMaxCorrectionTerms = 64;
constexpr int kMaxShift = 100000;
constexpr int kCachedShifts = 64;
constexpr double kRemainderTarget = 1e-16;
constexpr double kRoundingTarget = 1e-13;

inline long double exp_of(long double x) { return std::exp(x); }
inline long double log_of(long double x) { return std::log(x); }
inline quad exp_of(quad x) { return expq(x); }
inline quad log_of(quad x) { return logq(x); }

template <class T>
constexpr double epsilon_of() {
  if constexpr (std::is_same_v<T, quad>)
    return 1.93e-34;  // 2^-112
  else
    return std::numeric_limits<T>::epsilon();
}

template <class T>
T to_real(const Rational& r) {
  // Double-double split of a 256-bit mpf is exact enough for either format.
  const mpf_class f(r.raw(), 256);
  const double hi = f.get_d();
  const mpf_class rest = f - hi;
  return static_cast<T>(hi) + static_cast<T>(rest.get_d());
}

template <class T>
const std::vector<T>& bernoulli_table() {
  static const std::vector<T> table = [] {
    std::vector<T> t(kMaxCorrectionTerms + 1);
    for (int k = 1; k <= kMaxCorrectionTerms; ++k)
      t[static_cast<std::size_t>(k)] = to_real<T>(bernoulli_number(2u * static_cast<unsigned>(k)) /
                                                  Rational(factorial(2u * static_cast<unsigned>(k)), 1));
    return t;
  }();
  return table;
}

struct Partial {
  double value;
  double rounding;
};

template <class T>
Partial euler_maclaurin(double sigma, double a, int M, int K, const std::vector<long double>* logs) {
  const T s = static_cast<T>(sigma);
  const T at = static_cast<T>(a);
  const double eps = epsilon_of<T>();
  T sum = 0;
  double rounding = 0.0;
  for (int n = 0; n < M; ++n) {
    T L;
    if constexpr (std::is_same_v<T, long double>) {
      L = (logs && n < static_cast<int>(logs->size())) ? (*logs)[static_cast<std::size_t>(n)]
                                                        : log_of(static_cast<T>(n) + at);
    } else {
      L = log_of(static_cast<T>(n) + at);
    }
    const T term = exp_of(-s * L);
    sum += term;
    rounding += static_cast<double>(term) * (2.0 + std::abs(sigma * static_cast<double>(L)));
  }
  const T w = static_cast<T>(M) + at;
  const T log_w = log_of(w);
  const T t = exp_of(-s * log_w);  // w^{-s}
  T tail = w * t / (s - 1) + t / 2;
  double tail_mag = std::abs(static_cast<double>(w * t / (s - 1))) + std::abs(static_cast<double>(t));
  const auto& bern = bernoulli_table<T>();
  T r = s * t / w;  // (s)_1 w^{-s-1}
  const T w2 = w * w;
  for (int k = 1; k <= K; ++k) {
    const T term = bern[static_cast<std::size_t>(k)] * r;
    tail += term;
    tail_mag += std::abs(static_cast<double>(term));
    r *= (s + static_cast<T>(2 * k - 1)) * (s + static_cast<T>(2 * k)) / w2;
  }
  rounding += tail_mag * (4.0 + std::abs(sigma * static_cast<double>(log_w)));
  sum += tail;
  return {static_cast<double>(sum), rounding * eps};
}

// Remainder bound |B_2K|/(2K)! |(s)_2K| w^{1-sigma-2K} / (sigma+2K-1), w = M+a.
struct RemainderModel {
  double log_scale;  // log(|B_2K|/(2K)! |(s)_2K| / (sigma+2K-1)); -inf if (s)_2K = 0
  double exponent;   // 1 - sigma - 2K < 0

  RemainderModel(double sigma, int K) : exponent(1.0 - sigma - 2.0 * K) {
    double log_poch = 0.0;
    for (int j = 0; j < 2 * K; ++j) {
      const double f = std::abs(sigma + j);
      if (f == 0.0) {  // the expansion terminates
        log_scale = -std::numeric_limits<double>::infinity();
        return;
      }
      log_poch += std::log(f);
    }
    const double b = std::abs(static_cast<double>(bernoulli_table<long double>()[static_cast<std::size_t>(K)]));
    log_scale = std::log(b) + log_poch - std::log(sigma + 2.0 * K - 1.0);
  }

  double bound(double w) const { return std::exp(log_scale + exponent * std::log(w)); }

  // Smallest shift M >= 1 with bound(M + a) <= target.
  int minimal_shift(double a, double target) const {
    if (std::isinf(log_scale)) return 1;
    const double w = std::exp((std::log(target) - log_scale) / exponent);
    if (!(w < kMaxShift)) return kMaxShift + 1;
    int M = std::max(1, static_cast<int>(std::ceil(w - a)));
    while (M > 1 && bound(M - 1 + a) <= target) --M;
    while (bound(M + a) > target) ++M;
    return M;
  }
};

}  // namespace

HurwitzZeta::HurwitzZeta(double a) : a_(a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("Hurwitz zeta needs 0 < a <= 1");
  log_shift_.resize(kCachedShifts);
  for (int n = 0; n < kCachedShifts; ++n)
    log_shift_[static_cast<std::size_t>(n)] = std::log(static_cast<long double>(n) + a);
}

HurwitzZeta::Evaluation HurwitzZeta::evaluate(double sigma) const {
  if (!std::isfinite(sigma)) throw DomainError("non-finite sigma");
  if (sigma == 1.0) throw PoleError("zeta(s,a) has a pole at s = 1");

  int K = kCorrectionTerms;
  // the remainder integral needs sigma + 2K - 1 > 0
  while (sigma + 2.0 * K - 1.0 <= 1.0) ++K;
  if (K > kMaxCorrectionTerms) throw DomainError("sigma too negative: " + std::to_string(sigma));

  Evaluation ev;
  const RemainderModel model(sigma, K);
  const int M = model.minimal_shift(a_, kRemainderTarget);
  if (M > kMaxShift) throw DomainError("Euler-Maclaurin shift budget exhausted");
  ev.shift = M;
  ev.remainder_bound = std::isinf(model.log_scale) ? 0.0 : model.bound(M + a_);

  Partial p = euler_maclaurin<long double>(sigma, a_, M, K, &log_shift_);
  if (p.rounding > kRoundingTarget * std::max(1.0, std::abs(p.value))) {
    p = euler_maclaurin<quad>(sigma, a_, M, K, nullptr);
    ev.extended_precision = true;
  }
  ev.value = p.value;
  ev.rounding_estimate = p.rounding;
  return ev;
}

double hurwitz_zeta(double sigma, double a) { return HurwitzZeta(a)(sigma); }

}  // namespace hzeta
