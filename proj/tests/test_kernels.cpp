#include <doctest.h>

#include <cmath>
#include <vector>

#include "hzeta/errors.hpp"
#include "hzeta/exact/bernoulli.hpp"
#include "hzeta/kernels.hpp"
#include "support.hpp"

using hzeta::Rational;
using hzeta::RationalPoly;

namespace {

// h_N(a,x) = x e^{bx} - (e^x - 1) q(x), b = 1 - a, q = sum_{n<=N} B_n(b)/n! x^n.
// Derivatives by Leibniz, all in double.
struct LeibnizOracle {
  int N;
  double b;
  std::vector<double> q;  // q[n] = B_n(b)/n!

  LeibnizOracle(int n, double a) : N(n), b(1.0 - a) {
    for (int k = 0; k <= N; ++k)
      q.push_back(hzeta::bernoulli_poly(static_cast<unsigned>(k))(b) / std::tgamma(k + 1.0));
  }

  double q_derivative(int j, double x) const {
    double s = 0.0;
    for (int n = j; n <= N; ++n) {
      double falling = 1.0;
      for (int t = 0; t < j; ++t) falling *= n - t;
      s += q[static_cast<std::size_t>(n)] * falling * std::pow(x, n - j);
    }
    return s;
  }

  double h_derivative(int k, double x) const {
    const double lead = (std::pow(b, k) * x + k * std::pow(b, k - 1)) * std::exp(b * x);
    double leib = 0.0;
    for (int j = 0; j <= k; ++j) leib += std::tgamma(k + 1.0) / (std::tgamma(j + 1.0) * std::tgamma(k - j + 1.0)) * q_derivative(j, x);
    return lead - (std::exp(x) * leib - q_derivative(k, x));
  }

  double f(double x) const { return std::exp(-b * x) * h_derivative(N + 1, x); }
  double df(double x) const { return std::exp(-b * x) * (h_derivative(N + 2, x) - b * h_derivative(N + 1, x)); }
  double d2f(double x) const {
    return std::exp(-b * x) *
           (h_derivative(N + 3, x) - 2 * b * h_derivative(N + 2, x) + b * b * h_derivative(N + 1, x));
  }
  double P(double a, double x) const { return std::exp(-a * x) * d2f(x); }
};

RationalPoly poly_a(std::initializer_list<Rational> c) { return RationalPoly(c); }

const RationalPoly& A() {
  static const RationalPoly a = RationalPoly::identity();
  return a;
}

}  // namespace

TEST_SUITE("coefficient family") {
  TEST_CASE("N = 2 closed forms") {
    const auto& C = hzeta::build_coefficient_family(2);
    REQUIRE(C.coeffs.size() == 3);
    const RationalPoly B1 = hzeta::bernoulli_poly(1), B2 = hzeta::bernoulli_poly(2);
    const RationalPoly a2 = A() * A();
    CHECK(C[2] == Rational(-1, 2) * a2 * B2);
    CHECK(C[2] == poly_a({0, 0, Rational(-1, 12), Rational(1, 2), Rational(-1, 2)}));
    CHECK(C[0] == -a2 + (Rational(2) * A() + Rational(3) * a2) * B1 -
                      (RationalPoly::constant(1) + Rational(6) * A() + Rational(3) * a2) * B2);
    CHECK(C[1] == a2 * B1 + (Rational(-2) * A() - Rational(3) * a2) * B2);
  }

  TEST_CASE("N = 2 printed values") {
    CHECK(testing::round_sig(hzeta::build_coefficient_family(2)[0](Rational(-125, 100)).to_double(), 6) ==
          0.00911458);
    // at a = 1/2: -3/16 + 1 - 1/2 - 1/6
    CHECK(hzeta::build_coefficient_family(2)[0](Rational(1, 2)) == Rational(7, 48));
  }

  TEST_CASE("graph polynomials for N = 3 (scaled by 12) and N = 4") {
    const auto& C3 = hzeta::build_coefficient_family(3);
    CHECK(Rational(12) * C3[0] == poly_a({-2, 8, 60, -120, 0, 48}));
    CHECK(Rational(12) * C3[1] == poly_a({0, 2, 40, -60, -60, 72}));
    CHECK(Rational(12) * C3[2] == poly_a({0, 0, 5, 0, -30, 24}));
    CHECK(Rational(12) * C3[3] == poly_a({0, 0, 0, 1, -3, 2}));

    const auto& C4 = hzeta::build_coefficient_family(4);
    CHECK(C4[0] == poly_a({Rational(1, 6), Rational(3, 2), Rational(-3, 2), -15, 20, 0, -5}));
    CHECK(C4[1] == poly_a({Rational(1, 6), Rational(5, 6), Rational(-1, 2), -15, 15, 10, -10}));
    CHECK(C4[2] == poly_a({Rational(1, 60), Rational(1, 6), Rational(1, 12), Rational(-15, 4), Rational(5, 4),
                           Rational(15, 2), -5}));
    CHECK(C4[3] == poly_a({0, Rational(1, 90), Rational(1, 36), Rational(-1, 4), Rational(-5, 12), Rational(3, 2),
                           Rational(-5, 6)}));
    CHECK(C4[4] == poly_a({0, 0, Rational(1, 720), 0, Rational(-1, 24), Rational(1, 12), Rational(-1, 24)}));
  }

  TEST_CASE("degree, leading coefficient and the second route") {
    for (int N = 1; N <= 6; ++N) {
      const auto& C = hzeta::build_coefficient_family(N);
      CHECK(static_cast<int>(C.coeffs.size()) == N + 1);
      for (const auto& c : C.coeffs) CHECK(c.degree() == N + 2);
      const Rational invfact(1, static_cast<long>(std::lround(std::tgamma(N + 1.0))));
      CHECK(C[N] == Rational(-1) * invfact * A() * A() * hzeta::bernoulli_reflected(static_cast<unsigned>(N)));
      const auto other = hzeta::differentiate_form(hzeta::build_first_derivative_form(N), N);
      for (int m = 0; m <= N; ++m) CHECK(other[m] == C[m]);
    }
  }

  TEST_CASE("P_N matches e^{-ax} d^2/dx^2 f_N") {
    for (int N = 1; N <= 4; ++N) {
      const auto& C = hzeta::build_coefficient_family(N);
      for (int trial = 0; trial < 50; ++trial) {
        const double a = testing::random_rational(0.0, 1.0).to_double();
        const LeibnizOracle o(N, a);
        for (double x : {0.1, 1.0, 3.0}) {
          CHECK(std::abs(C.eval(a, x) - o.P(a, x)) <= 1e-9);
        }
      }
    }
  }

  TEST_CASE("in_x and eval_P") {
    const auto& C = hzeta::build_coefficient_family(3);
    const Rational a(1, 5);
    const RationalPoly p = C.in_x(a);
    Rational sum(0);
    for (int m = 0; m <= 3; ++m) sum += C[m](a);
    CHECK(p(Rational(1)) == sum);
    CHECK(hzeta::eval_coefficient_poly(3, 0.2, 1.0) == doctest::Approx(sum.to_double()).epsilon(1e-13));
    CHECK(hzeta::build_coefficient_family(1).in_x(Rational(3, 7)).degree() == 1);
    CHECK(hzeta::eval_coefficient_poly(2, 0.5, 0.0) == doctest::Approx(7.0 / 48.0).epsilon(1e-14));
    const hzeta::CoefficientPolyEvaluator ev(2, 0.5);
    CHECK(ev(0.7) == doctest::Approx(hzeta::eval_coefficient_poly(2, 0.5, 0.7)).epsilon(1e-14));
  }
}

TEST_SUITE("first derivative form") {
  TEST_CASE("value at x = 0 is (N+2) B_{N+1}(1-a)") {
    for (int N = 0; N <= 6; ++N) {
      const auto form = hzeta::build_first_derivative_form(N);
      const RationalPoly want = Rational(N + 2) * hzeta::bernoulli_reflected(static_cast<unsigned>(N + 1));
      CHECK(form.at_zero() == want);
      if (N >= 1 && N <= 4)
        for (int trial = 0; trial < 20; ++trial) {
          const Rational a = testing::random_rational(0.0, 1.0);
          CHECK(form.at_zero()(a) == Rational(N + 2) * hzeta::bernoulli_poly(static_cast<unsigned>(N + 1))(Rational(1) - a));
        }
    }
  }

  TEST_CASE("matches the Leibniz oracle and finite differences of f_N") {
    for (int N = 1; N <= 4; ++N) {
      const auto form = hzeta::build_first_derivative_form(N);
      for (double a : {0.1, 0.3, 0.77}) {
        const LeibnizOracle o(N, a);
        for (double x : {0.5, 1.0, 2.0}) {
          CHECK(form.eval(a, x) == doctest::Approx(o.df(x)).epsilon(1e-10));
          const double h = 1e-4;
          const double fd = (o.f(x + h) - o.f(x - h)) / (2 * h);
          CHECK(std::abs(fd - form.eval(a, x)) <= 1e-6 * std::max(1.0, std::abs(fd)));
        }
      }
    }
  }

  TEST_CASE("P_N e^{ax} is the x-derivative of the form") {
    for (int N = 1; N <= 4; ++N) {
      const auto form = hzeta::build_first_derivative_form(N);
      for (int trial = 0; trial < 40; ++trial) {
        const double a = testing::random_rational(0.0, 1.0).to_double();
        const double x = testing::random_rational(0.05, 5.0).to_double();
        const double h = 1e-4;
        const double fd = (form.eval(a, x + h) - form.eval(a, x - h)) / (2 * h);
        const double want = hzeta::eval_coefficient_poly(N, a, x) * std::exp(a * x);
        CHECK(std::abs(fd - want) <= 1e-5 * std::max(1.0, std::abs(want)));
      }
    }
  }

  TEST_CASE("sign as x grows is -sign B_N(1-a)") {
    for (int N = 1; N <= 4; ++N) {
      const auto form = hzeta::build_first_derivative_form(N);
      for (int k = 1; k < 20; ++k) {
        const Rational a(k, 20);
        const int s = hzeta::bernoulli_poly(static_cast<unsigned>(N))(Rational(1) - a).sign();
        if (s == 0) continue;
        const double v = form.eval(a.to_double(), 200.0);
        CHECK((v > 0 ? 1 : -1) == -s);
      }
    }
  }
}

TEST_SUITE("mellin kernel") {
  TEST_CASE("H_0(0.3, 2)") {
    const double want = std::exp(1.4) / (std::exp(2.0) - 1) - 0.5;
    CHECK(hzeta::mellin_kernel(0, 0.3, 2.0) == doctest::Approx(want).epsilon(1e-14));
    CHECK(hzeta::mellin_kernel(0, 0.3, 2.0) == doctest::Approx(0.13471033968905077).epsilon(1e-14));
  }

  TEST_CASE("reference values") {
    struct Ref {
      int N;
      double a, x, value;
    };
    // 40-digit evaluations of the closed form
    const Ref refs[] = {
        {1, 0.25, 0.5, -0.007139344224197456},  {2, 0.3, 0.001, -6.99955119873264613e-9},
        {2, 0.3, 3.0, -0.04046117309841259},     {3, 0.6, 1.5, 0.002676677204526576},
        {4, 0.45, 10.0, -0.6919286935356412},    {4, 0.2, 0.01, 1.974288600246452e-12},
    };
    for (const auto& r : refs) CHECK(hzeta::mellin_kernel(r.N, r.a, r.x) == doctest::Approx(r.value).epsilon(1e-12));
  }

  TEST_CASE("leading Taylor term near 0") {
    for (double a : {0.1, 0.3, 0.6}) {
      const double b2 = hzeta::bernoulli_poly(2)(1.0 - a) / 2.0;
      const double x = 1e-5;
      CHECK(hzeta::mellin_kernel(1, a, x) == doctest::Approx(b2 * x).epsilon(1e-4));
    }
  }

  TEST_CASE("series and direct branches agree") {
    for (int N = 0; N <= 4; ++N)
      for (double a : {0.05, 0.3, 0.5, 0.9}) {
        const hzeta::MellinKernel k(N, a);
        for (double x : {0.3, 0.45, 0.5, 0.6}) CHECK(std::abs(k.series(x) - k.direct(x)) <= 1e-12);
      }
    const hzeta::MellinKernel k2(2, 0.3);
    CHECK(std::abs(k2.series(0.001) - (-6.99955119873264613e-9)) <= 1e-12);
  }

  TEST_CASE("domain") {
    CHECK_THROWS_AS(hzeta::mellin_kernel(1, 0.0, 1.0), hzeta::DomainError);
    CHECK_THROWS_AS(hzeta::mellin_kernel(1, 1.0, 1.0), hzeta::DomainError);
    CHECK_THROWS_AS(hzeta::mellin_kernel(1, 0.5, 0.0), hzeta::DomainError);
    CHECK_THROWS_AS(hzeta::mellin_kernel(1, 0.5, -1.0), hzeta::DomainError);
  }
}

TEST_SUITE("scaled kernel") {
  TEST_CASE("values") {
    CHECK(hzeta::scaled_kernel(0, 0.3, 1.0) == doctest::Approx(std::exp(0.7) - (std::exp(1.0) - 1)).epsilon(1e-13));
    CHECK(hzeta::scaled_kernel(0, 0.3, 1.0) == doctest::Approx(0.29547087901143129).epsilon(1e-13));
    for (int N = 0; N <= 4; ++N) CHECK(std::abs(hzeta::scaled_kernel(N, 0.4, 1e-9)) < 1e-12);
  }

  TEST_CASE("sign follows H") {
    for (int N = 0; N <= 4; ++N)
      for (double a : {0.15, 0.4, 0.8})
        for (double x : {0.5, 1.0, 2.0}) {
          const double H = hzeta::mellin_kernel(N, a, x);
          const double h = hzeta::scaled_kernel(N, a, x);
          CHECK((H > 0) == (h > 0));
        }
  }

  TEST_CASE("vanishes to order N+2") {
    for (int N = 0; N <= 6; ++N)
      for (int trial = 0; trial < 10; ++trial) {
        const Rational a = testing::random_rational(0.0, 1.0);
        const auto t = hzeta::scaled_kernel_taylor(N, a, N + 4);
        for (int k = 0; k <= N + 1; ++k) CHECK(t[static_cast<std::size_t>(k)].is_zero());
        const Rational lead = hzeta::bernoulli_poly(static_cast<unsigned>(N + 1))(Rational(1) - a) /
                              Rational(static_cast<long>(std::lround(std::tgamma(N + 2.0))));
        CHECK(t[static_cast<std::size_t>(N + 2)] == lead);
      }
  }

  TEST_CASE("Taylor coefficients match the float kernel") {
    const Rational a(3, 10);
    for (int N = 0; N <= 3; ++N) {
      const auto t = hzeta::scaled_kernel_taylor(N, a, N + 12);
      const double x = 0.05;
      double series = 0.0;
      for (std::size_t k = 0; k < t.size(); ++k) series += t[k].to_double() * std::pow(x, static_cast<double>(k));
      CHECK(hzeta::scaled_kernel(N, 0.3, x) == doctest::Approx(series).epsilon(1e-9));
    }
  }
}
