#include "hzeta/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "hzeta/errors.hpp"
#include "hzeta/exact/bernoulli.hpp"
#include "hzeta/exact/sturm.hpp"

namespace hzeta {
namespace {

constexpr double kResidualLimit = 1e-10;
constexpr double kSlopeFloor = 1e-4;
constexpr double kMellinLimit = 1e-7;
constexpr double kPoleProbe = 1e-6;
constexpr std::size_t kMaxNotes = 10;
// x0 grows without bound as a approaches a zero of B_N, or 0 and 1
constexpr double kBernoulliGap = 0.05;

void note(SuiteResult& r, const std::string& msg) {
  ++r.failures;
  if (r.failure_notes.size() < kMaxNotes) r.failure_notes.push_back(msg);
}

std::string where(int N, const Rational& a) {
  std::ostringstream os;
  os << "N=" << N << " a=" << a.to_string();
  return os.str();
}

}  // namespace

std::vector<Rational> parameter_grid(const Rational& step) {
  if (step.sign() <= 0 || step >= Rational(1)) throw DomainError("a-step must lie in (0,1)");
  std::vector<Rational> out;
  const Rational half(1, 2);
  for (Rational a = step; a < Rational(1); a += step)
    if (a != half) out.push_back(a);
  return out;
}

std::vector<ScanRow> theorem_scan(int nmax, const std::vector<Rational>& grid, double step, bool locate,
                                  unsigned threads) {
  if (nmax < 0) throw DomainError("nmax must be >= 0");
  const std::size_t per_n = grid.size();
  const std::size_t total = per_n * static_cast<std::size_t>(nmax + 1);
  return parallel_map<ScanRow>(
      total,
      [&](std::size_t idx) {
        ScanRow row;
        row.N = static_cast<int>(idx / per_n);
        row.a = grid[idx % per_n];
        try {
          row.predicate = has_zero_in(row.N, row.a);
        } catch (const SignZero&) {
          row.boundary = true;
        }
        const HurwitzZeta zeta(row.a.to_double());
        const double lo = -row.N;
        const double hi = row.N == 0 ? 1.0 - kPoleProbe : -row.N + 1.0;
        const ScanResult s = scan_sign_changes(zeta, lo, hi, step);
        row.count = s.sign_changes + s.exact_zeros;
        row.refinements = s.refinements;
        if (locate && row.predicate) row.zero = locate_zero(row.N, row.a);
        return row;
      },
      threads);
}

SuiteResult verify_theorem1(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "theorem1";
  const auto rows = theorem_scan(opt.nmax, parameter_grid(opt.a_step), opt.scan_step, true, opt.threads);
  double worst_residual = 0.0, min_slope = INFINITY;
  int max_count = 0;
  for (const auto& row : rows) {
    ++r.cases;
    max_count = std::max(max_count, row.count);
    if (row.boundary) {
      note(r, where(row.N, row.a) + ": B_N(a) B_{N+1}(a) = 0");
      continue;
    }
    const int expected = row.predicate ? 1 : 0;
    if (row.count != expected) {
      note(r, where(row.N, row.a) + ": " + std::to_string(row.count) + " sign changes, predicate says " +
                  std::to_string(expected));
      continue;
    }
    if (row.zero) {
      const auto& z = *row.zero;
      worst_residual = std::max(worst_residual, z.residual);
      min_slope = std::min(min_slope, std::abs(z.derivative));
      if (z.residual > kResidualLimit || std::abs(z.derivative) < kSlopeFloor)
        note(r, where(row.N, row.a) + ": residual " + std::to_string(z.residual) + ", slope " +
                    std::to_string(z.derivative));
    }
  }
  r.worst = {{"max_residual", worst_residual},
             {"min_abs_derivative", min_slope},
             {"max_sign_changes", static_cast<double>(max_count)}};
  r.passed = r.failures == 0;
  return r;
}

SuiteResult verify_corollary(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "corollary";
  const auto grid = parameter_grid(opt.a_step);
  const std::size_t per_m = grid.size();
  const auto counts = parallel_map<int>(
      per_m * static_cast<std::size_t>(opt.mmax + 1),
      [&](std::size_t idx) {
        return corollary_zero_count(static_cast<int>(idx / per_m), grid[idx % per_m], opt.scan_step);
      },
      opt.threads);
  int worst = 1;
  for (std::size_t idx = 0; idx < counts.size(); ++idx) {
    ++r.cases;
    if (std::abs(counts[idx] - 1) > std::abs(worst - 1)) worst = counts[idx];
    if (counts[idx] != 1)
      note(r, "M=" + std::to_string(idx / per_m) + " a=" + grid[idx % per_m].to_string() + ": " +
                  std::to_string(counts[idx]) + " zeros");
  }
  r.worst = {{"worst_zero_count", static_cast<double>(worst)}};
  r.passed = r.failures == 0;
  return r;
}

const std::vector<MellinSample>& mellin_samples() {
  static const std::vector<MellinSample> samples = {
      {0, 0.3, 0.5},  {0, 0.75, 0.25}, {0, 0.1, 0.8},   {1, 0.1, -0.5}, {1, 0.4, -0.25},
      {1, 0.85, -0.7}, {2, 0.4, -1.5},  {2, 0.2, -1.3}, {2, 0.65, -1.8},
  };
  return samples;
}

SuiteResult verify_mellin(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "mellin";
  double worst = 0.0;
  for (const auto& s : mellin_samples()) {
    ++r.cases;
    const Rational a = to_exact_parameter(s.a);
    try {
      const double d = mellin_check(s.N, a, s.sigma);
      worst = std::max(worst, d);
      if (!(d <= kMellinLimit))
        note(r, where(s.N, a) + " sigma=" + std::to_string(s.sigma) + ": discrepancy " + std::to_string(d));
    } catch (const QuadratureNonConvergence& e) {
      note(r, where(s.N, a) + ": " + e.what());
    }
  }
  (void)opt;
  r.worst = {{"max_discrepancy", worst}};
  r.passed = r.failures == 0;
  return r;
}

std::vector<std::pair<int, Rational>> lemma_samples(std::size_t count) {
  std::mt19937 gen(20240601u);
  std::uniform_int_distribution<int> pick_n(1, 4), pick_k(50, 950);
  std::vector<std::vector<double>> zeros(5);
  for (int N = 1; N <= 4; ++N)
    for (const auto& r : isolate_roots(bernoulli_poly(static_cast<unsigned>(N)), Rational(-1, 10), Rational(11, 10)))
      zeros[static_cast<std::size_t>(N)].push_back(r.approx());
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, Rational>> out;
  while (out.size() < count) {
    const int N = pick_n(gen), k = pick_k(gen);
    if (!seen.insert({N, k}).second) continue;
    const auto& zs = zeros[static_cast<std::size_t>(N)];
    if (std::any_of(zs.begin(), zs.end(), [&](double z) { return std::abs(z - k / 1000.0) < kBernoulliGap; }))
      continue;
    const Rational a(k, 1000);
    if (has_zero_in(N, a)) out.emplace_back(N, a);
  }
  return out;
}

SuiteResult verify_lemma(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "lemma";
  const auto pairs = lemma_samples();
  struct Outcome {
    std::string error;
    double residual = 0.0, x0 = 0.0, limit = 0.0;
    bool monotone = false;
  };
  const auto outcomes = parallel_map<Outcome>(
      pairs.size(),
      [&](std::size_t i) {
        Outcome o;
        try {
          const auto c = x0_crossing(pairs[i].first, pairs[i].second);
          o.residual = c.residual;
          o.x0 = c.x0;
          o.limit = c.search_limit;
          o.monotone = monotonicity_check(pairs[i].first, pairs[i].second);
        } catch (const Error& e) {
          o.error = e.what();
        }
        return o;
      },
      opt.threads);
  double worst_residual = 0.0, max_x0 = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ++r.cases;
    const auto& o = outcomes[i];
    const std::string at = where(pairs[i].first, pairs[i].second);
    if (!o.error.empty()) {
      note(r, at + ": " + o.error);
      continue;
    }
    worst_residual = std::max(worst_residual, o.residual);
    max_x0 = std::max(max_x0, o.x0);
    if (o.limit > 50.0) note(r, at + ": crossing beyond x = 50 (x0 = " + std::to_string(o.x0) + ")");
    if (o.residual > kResidualLimit) note(r, at + ": |H_N(x0)| = " + std::to_string(o.residual));
    if (!o.monotone) note(r, at + ": x0^-sigma Gamma(sigma) zeta(sigma,a) not monotone");
  }
  r.worst = {{"max_crossing_residual", worst_residual}, {"max_x0", max_x0}};
  r.passed = r.failures == 0;
  return r;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "theorem1") return verify_theorem1(opt);
  if (name == "corollary") return verify_corollary(opt);
  if (name == "mellin") return verify_mellin(opt);
  if (name == "lemma") return verify_lemma(opt);
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace hzeta
