#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hzeta/exact/rational.hpp"
#include "hzeta/zeros.hpp"

namespace hzeta {

/// a = k * step for k = 1, 2, ... while a < 1, skipping a = 1/2.
std::vector<Rational> parameter_grid(const Rational& step);

/// f(0), ..., f(n-1) evaluated on `threads` workers (0: hardware count);
/// results keep index order. The first exception is rethrown.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& f, unsigned threads = 0) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::optional<T>> slots(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  if (threads == 1 || n < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// One (N, a) cell of the zero scan.
struct ScanRow {
  int N = 0;
  Rational a;
  bool predicate = false;
  bool boundary = false;  // B_N(a) B_{N+1}(a) = 0
  int count = 0;          // sign changes of zeta(., a) on (-N, -N+1)
  int refinements = 0;
  std::optional<ZeroReport> zero;
};

/// Scan of (-N, -N+1) for N = 0..nmax over the grid, sorted by (N, a). For
/// N = 0 the scan stops at the pole probe 1 - 1e-6. Located zeros are
/// attached when `locate` is set and the predicate holds.
std::vector<ScanRow> theorem_scan(int nmax, const std::vector<Rational>& grid, double step = 1e-3,
                                  bool locate = true, unsigned threads = 0);

struct SuiteResult {
  std::string name;
  bool passed = false;
  int cases = 0;
  int failures = 0;
  std::vector<std::pair<std::string, double>> worst;  // named worst-case figures
  std::vector<std::string> failure_notes;             // first few failing cases
};

struct SuiteOptions {
  int nmax = 4;
  int mmax = 2;
  Rational a_step = Rational(1, 1000);
  double scan_step = 1e-3;
  unsigned threads = 0;
};

/// Zero counts agree with the predicate; every located zero has residual
/// <= 1e-10 and |d zeta / d sigma| >= 1e-4; no interval has >= 2 changes.
SuiteResult verify_theorem1(const SuiteOptions& opt);
/// corollary_check for M = 0..mmax on the grid.
SuiteResult verify_corollary(const SuiteOptions& opt);
/// mellin_check <= 1e-7 on nine (N, a, sigma) triples with N in {0, 1, 2}.
SuiteResult verify_mellin(const SuiteOptions& opt);
/// x0_crossing plus monotonicity_check on 50 seeded (N, a) pairs.
SuiteResult verify_lemma(const SuiteOptions& opt);

/// Dispatch by name: theorem1, corollary, mellin, lemma.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

struct MellinSample {
  int N;
  double a;
  double sigma;
};
const std::vector<MellinSample>& mellin_samples();

/// 50 (N, a) pairs with N in 1..4, a = k/1000 in [0.05, 0.95] at distance
/// >= 0.05 from every zero of B_N, and B_N(a) B_{N+1}(a) < 0, drawn from a
/// fixed-seed generator.
std::vector<std::pair<int, Rational>> lemma_samples(std::size_t count = 50);

}  // namespace hzeta
