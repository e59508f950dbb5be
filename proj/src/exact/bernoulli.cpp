#include "hzeta/exact/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace hzeta {
namespace {

struct BernoulliTable {
  std::shared_mutex mutex;
  std::vector<Rational> numbers{Rational(1)};
  std::vector<RationalPoly> polys;
};

BernoulliTable& table() {
  static BernoulliTable t;
  return t;
}

// Caller holds the unique lock.
void extend_numbers(std::vector<Rational>& b, unsigned n) {
  while (b.size() <= n) {
    const unsigned m = static_cast<unsigned>(b.size());
    // (m+1) B_m = -sum_{k<m} C(m+1,k) B_k
    mpq_class acc = 0;
    for (unsigned k = 0; k < m; ++k) acc += mpq_class(binomial(m + 1, k)) * b[k].raw();
    b.emplace_back(mpq_class(-acc / (m + 1)));
  }
}

}  // namespace

Rational bernoulli_number(unsigned n) {
  BernoulliTable& t = table();
  {
    std::shared_lock lock(t.mutex);
    if (n < t.numbers.size()) return t.numbers[n];
  }
  std::unique_lock lock(t.mutex);
  extend_numbers(t.numbers, n);
  return t.numbers[n];
}

RationalPoly bernoulli_poly(unsigned n) {
  BernoulliTable& t = table();
  {
    std::shared_lock lock(t.mutex);
    if (n < t.polys.size()) return t.polys[n];
  }
  std::unique_lock lock(t.mutex);
  extend_numbers(t.numbers, n);
  while (t.polys.size() <= n) {
    const unsigned m = static_cast<unsigned>(t.polys.size());
    std::vector<Rational> c(m + 1);
    for (unsigned k = 0; k <= m; ++k) c[m - k] = Rational(binomial(m, k), 1) * t.numbers[k];
    t.polys.emplace_back(std::move(c));
  }
  return t.polys[n];
}

double bernoulli_over_factorial(unsigned n) {
  return (bernoulli_number(n) / Rational(factorial(n), 1)).to_double();
}

}  // namespace hzeta
