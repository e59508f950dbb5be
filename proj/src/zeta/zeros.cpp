#include <algorithm>
#include <optional>
#include <cmath>
#include <string>
#include <tuple>
#include <vector>

#include "hzeta/errors.hpp"
#include "hzeta/exact/bernoulli.hpp"
#include "hzeta/kernels.hpp"
#include "hzeta/zeros.hpp"

namespace hzeta {
namespace {

constexpr double kBisectionWidth = 1e-12;
constexpr double kDerivativeStep = 1e-6;
constexpr double kPoleProbe = 1e-6;
constexpr double kEndpointAttribution = 1e-9;

void check_parameter(const Rational& a) {
  if (a.sign() <= 0 || a >= Rational(1)) throw DomainError("a must lie in (0,1), got " + a.to_string());
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Sign changes along consecutive samples; a run of exact zeros counts once.
void count_changes(const std::vector<double>& v, ScanResult& out) {
  int last = 0;
  bool in_zero_run = false;
  for (double value : v) {
    const int s = sign_of(value);
    if (s == 0) {
      if (!in_zero_run) ++out.exact_zeros;
      in_zero_run = true;
      continue;
    }
    if (last != 0 && s != last && !in_zero_run) ++out.sign_changes;
    in_zero_run = false;
    last = s;
  }
}

// Sign changes hidden inside [lo, hi] whose endpoint values share a sign.
int refine_window(const HurwitzZeta& zeta, double lo, double hi, double step, double min_step,
                  ScanResult& stats) {
  ++stats.refinements;
  stats.finest_step = std::min(stats.finest_step, step);
  const int n = std::max(2, static_cast<int>(std::ceil((hi - lo) / step)));
  std::vector<double> x(static_cast<std::size_t>(n) + 1), v(x.size());
  for (int i = 0; i <= n; ++i) {
    x[static_cast<std::size_t>(i)] = i == n ? hi : lo + (hi - lo) * i / n;
    v[static_cast<std::size_t>(i)] = zeta(x[static_cast<std::size_t>(i)]);
  }
  ScanResult local;
  count_changes(v, local);
  int found = local.sign_changes + local.exact_zeros;
  if (found > 0 || step / 2 < min_step) return found;
  for (int i = 1; i < n; ++i) {
    const double a = std::abs(v[static_cast<std::size_t>(i - 1)]), b = std::abs(v[static_cast<std::size_t>(i)]),
                 c = std::abs(v[static_cast<std::size_t>(i + 1)]);
    if (b < a && b < c)
      found += refine_window(zeta, x[static_cast<std::size_t>(i - 1)], x[static_cast<std::size_t>(i + 1)],
                             step / 2, min_step, stats);
  }
  return found;
}

ScanResult scan_with_endpoints(const HurwitzZeta& zeta, double lo, double hi, double step,
                               double min_step, std::optional<double> lo_value,
                               std::optional<double> hi_value) {
  if (!(step > 0.0)) throw DomainError("scan step must be > 0");
  if (!(lo < hi)) throw DomainError("scan needs lo < hi");
  if (lo <= 1.0 && 1.0 <= hi) throw PoleError("scan range contains sigma = 1");
  const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / step - 1e-9)));
  std::vector<double> x(static_cast<std::size_t>(n) + 1), v(x.size());
  for (int i = 0; i <= n; ++i) {
    x[static_cast<std::size_t>(i)] = i == n ? hi : lo + (hi - lo) * i / n;
    v[static_cast<std::size_t>(i)] = zeta(x[static_cast<std::size_t>(i)]);
  }
  if (lo_value) v.front() = *lo_value;
  if (hi_value) v.back() = *hi_value;

  ScanResult out;
  out.finest_step = (hi - lo) / n;
  count_changes(v, out);
  for (int i = 1; i < n; ++i) {
    const double a = v[static_cast<std::size_t>(i - 1)], b = v[static_cast<std::size_t>(i)],
                 c = v[static_cast<std::size_t>(i + 1)];
    const int s = sign_of(b);
    if (s == 0 || sign_of(a) != s || sign_of(c) != s) continue;
    if (std::abs(b) < std::abs(a) && std::abs(b) < std::abs(c))
      out.sign_changes += refine_window(zeta, x[static_cast<std::size_t>(i - 1)],
                                        x[static_cast<std::size_t>(i + 1)], out.finest_step / 2,
                                        min_step, out);
  }
  return out;
}

}  // namespace

Rational to_exact_parameter(double a) { return Rational::approximate(a, kMaxConversionDenominator); }

bool has_zero_in(int N, const Rational& a) {
  if (N < 0) throw DomainError("N must be >= 0");
  check_parameter(a);
  const Rational lower = bernoulli_poly(static_cast<unsigned>(N))(a);
  const Rational upper = bernoulli_poly(static_cast<unsigned>(N + 1))(a);
  if (lower.is_zero() || upper.is_zero())
    throw SignZero("B_N(a) B_{N+1}(a) = 0 at N = " + std::to_string(N) + ", a = " + a.to_string());
  return lower.sign() * upper.sign() < 0;
}

ZeroReport locate_zero(int N, const Rational& a) {
  ZeroReport r;
  r.N = N;
  r.a = a;
  r.exists = has_zero_in(N, a);
  if (!r.exists) return r;

  const HurwitzZeta zeta(a.to_double());
  double lo = -N, hi = -N + 1;
  const int sign_lo = zeta_at_nonpositive_integer(N, a).sign();
  int sign_hi;
  if (N == 0) {
    hi = 1.0 - kPoleProbe;
    sign_hi = sign_of(zeta(hi));
  } else {
    sign_hi = zeta_at_nonpositive_integer(N - 1, a).sign();
  }
  if (sign_lo == sign_hi || sign_lo == 0 || sign_hi == 0)
    throw NoSignChange("no sign change of zeta on (" + std::to_string(-N) + ", " +
                       std::to_string(-N + 1) + ") for a = " + a.to_string());

  std::optional<double> exact_hit;
  auto bisect = [&](double width) {
    while (!exact_hit && hi - lo > width) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // adjacent doubles
      const int s = sign_of(zeta(mid));
      if (s == 0)
        exact_hit = mid;
      else
        (s == sign_lo ? lo : hi) = mid;
    }
  };
  bisect(kBisectionWidth);
  r.bracket = {lo, hi};
  if (exact_hit) {
    r.bracket = {*exact_hit - kBisectionWidth / 2, *exact_hit + kBisectionWidth / 2};
    r.zero = *exact_hit;
  } else {
    // past the certified bracket, down to machine resolution, since |zeta'|
    // is large near the pole
    bisect(0.0);
    r.zero = exact_hit ? *exact_hit : (std::abs(zeta(lo)) <= std::abs(zeta(hi)) ? lo : hi);
  }
  r.residual = std::abs(zeta(r.zero));
  r.derivative = (zeta(r.zero + kDerivativeStep) - zeta(r.zero - kDerivativeStep)) / (2 * kDerivativeStep);
  r.simplicity_evidence = sign_of(r.derivative);
  return r;
}

ZeroReport locate_zero(int N, double a) {
  ZeroReport r = locate_zero(N, to_exact_parameter(a));
  r.a_input = a;
  return r;
}

ScanResult scan_sign_changes(const HurwitzZeta& zeta, double lo, double hi, double step,
                             double min_step) {
  return scan_with_endpoints(zeta, lo, hi, step, min_step, std::nullopt, std::nullopt);
}

int count_zeros_scan(double lo, double hi, double a, double step) {
  const ScanResult r = scan_sign_changes(HurwitzZeta(a), lo, hi, step);
  return r.sign_changes + r.exact_zeros;
}

int corollary_zero_count(int M, const Rational& a, double step) {
  if (M < 0) throw DomainError("M must be >= 0");
  check_parameter(a);
  const HurwitzZeta zeta(a.to_double());
  const double left = -2.0 * M - 2, inner = -2.0 * M - 1, right = -2.0 * M;
  const Rational v_left = zeta_at_nonpositive_integer(2 * M + 2, a);
  const Rational v_right = zeta_at_nonpositive_integer(2 * M, a);

  int count = 0;
  double scan_lo = left;
  std::optional<double> left_value = v_left.to_double();
  if (v_left.is_zero()) {
    ++count;
    scan_lo = left + kEndpointAttribution;
    left_value.reset();
  }
  double scan_hi = right;
  std::optional<double> right_value = v_right.to_double();
  if (v_right.is_zero()) {  // excluded end of the half-open interval
    scan_hi = right - kEndpointAttribution;
    right_value.reset();
  }

  // A zero within 1e-9 of the inner odd integer belongs to that point.
  const Rational v_inner = zeta_at_nonpositive_integer(2 * M + 1, a);
  bool inner_zero = v_inner.is_zero() ||
                    sign_of(zeta(inner - kEndpointAttribution)) != sign_of(zeta(inner + kEndpointAttribution));
  std::optional<double> inner_value = v_inner.to_double();
  double inner_lo = inner, inner_hi = inner;
  if (inner_zero) {
    ++count;
    inner_lo = inner - kEndpointAttribution;
    inner_hi = inner + kEndpointAttribution;
    inner_value.reset();
  }

  for (const auto& [lo, hi, lv, hv] :
       {std::tuple{scan_lo, inner_lo, left_value, inner_value},
        std::tuple{inner_hi, scan_hi, inner_value, right_value}}) {
    const ScanResult r = scan_with_endpoints(zeta, lo, hi, step, 1e-6, lv, hv);
    count += r.sign_changes + r.exact_zeros;
  }
  return count;
}

bool corollary_check(int M, const Rational& a, double step) { return corollary_zero_count(M, a, step) == 1; }

CrossingReport x0_crossing(int N, const Rational& a) {
  if (!has_zero_in(N, a))
    throw DomainError("x0_crossing needs B_N(a) B_{N+1}(a) < 0 (N = " + std::to_string(N) +
                      ", a = " + a.to_string() + ")");
  const MellinKernel kernel(N, a.to_double());
  constexpr int kGridPoints = 10000;
  constexpr double kGridStart = 1e-8;

  CrossingReport r;
  r.N = N;
  r.a = a;
  std::vector<double> x(kGridPoints), v(kGridPoints);
  std::size_t crossing = 0;
  for (double limit = 50.0; ; limit *= 2.0) {
    if (limit > 1e5) throw NoCrossing("H_N keeps its sign up to x = 1e5");
    const double ratio = std::log(limit / kGridStart) / (kGridPoints - 1);
    int changes = 0;
    for (int i = 0; i < kGridPoints; ++i) {
      x[static_cast<std::size_t>(i)] = i == kGridPoints - 1 ? limit : kGridStart * std::exp(ratio * i);
      v[static_cast<std::size_t>(i)] = kernel(x[static_cast<std::size_t>(i)]);
      if (i > 0 && sign_of(v[static_cast<std::size_t>(i)]) != sign_of(v[static_cast<std::size_t>(i - 1)])) {
        ++changes;
        crossing = static_cast<std::size_t>(i);
      }
    }
    r.search_limit = limit;
    r.grid_sign_changes = changes;
    if (changes > 1)
      throw MultipleCrossings(std::to_string(changes) + " sign changes of H_N on (0, " +
                              std::to_string(limit) + ")");
    if (changes == 1) break;
  }

  double lo = x[crossing - 1], hi = x[crossing];
  const int sign_lo = sign_of(v[crossing - 1]);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const int s = sign_of(kernel(mid));
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    (s == sign_lo ? lo : hi) = mid;
  }
  r.x0 = 0.5 * (lo + hi);
  r.residual = std::abs(kernel(r.x0));
  r.pattern = sign_lo < 0 ? CrossingPattern::NegThenPos : CrossingPattern::PosThenNeg;
  return r;
}

MonotonicityReport monotonicity_report(int N, const Rational& a) {
  MonotonicityReport rep;
  rep.x0 = x0_crossing(N, a).x0;
  const HurwitzZeta zeta(a.to_double());
  constexpr int kPoints = 200;
  const double log_x0 = std::log(rep.x0);
  std::vector<double> g(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    const double sigma = -N + (i + 1.0) / (kPoints + 1.0);
    g[static_cast<std::size_t>(i)] = std::exp(-sigma * log_x0) * gamma_real(sigma) * zeta(sigma);
  }
  rep.g_first = g.front();
  rep.g_last = g.back();
  rep.direction = sign_of(rep.g_last - rep.g_first);
  rep.monotone = rep.direction != 0;
  for (int i = 0; i + 1 < kPoints && rep.monotone; ++i) {
    const double d = g[static_cast<std::size_t>(i + 1)] - g[static_cast<std::size_t>(i)];
    const double tol = 1e-10 * std::max({1.0, std::abs(g[static_cast<std::size_t>(i)]),
                                         std::abs(g[static_cast<std::size_t>(i + 1)])});
    if (rep.direction * d < -tol) rep.monotone = false;
  }
  return rep;
}

bool monotonicity_check(int N, const Rational& a) { return monotonicity_report(N, a).monotone; }

}  // namespace hzeta
