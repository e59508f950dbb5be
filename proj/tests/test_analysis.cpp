#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "hzeta/analysis.hpp"
#include "hzeta/errors.hpp"
#include "hzeta/exact/bernoulli.hpp"
#include "hzeta/exact/sturm.hpp"
#include "hzeta/kernels.hpp"
#include "support.hpp"

using hzeta::Rational;

namespace {

struct PrintedTable {
  int N, m;
  std::vector<double> derivative_roots;
  std::vector<double> roots;
  std::vector<int> derivative_signs;  // per segment, left to right
};

const std::vector<PrintedTable>& printed_tables() {
  static const std::vector<PrintedTable> t = {
      {2, 0, {0.128, 0.744}, {0.402, 0.962}, {-1, 1, -1}}, {2, 1, {0.129, 0.684}, {0.253, 0.899}, {-1, 1, -1}},
      {2, 2, {0.135, 0.614}, {0.211, 0.788}, {-1, 1, -1}}, {3, 0, {0.440, 0.976}, {0.141, 0.696}, {1, -1, 1}},
      {3, 1, {0.388, 0.940}, {0.622}, {1, -1, 1}},         {3, 2, {0.361, 0.896}, {0.542}, {1, -1, 1}},
      {3, 3, {0.355, 0.844}, {0.5}, {1, -1, 1}},           {4, 0, {0.176, 0.715}, {0.427, 0.952}, {1, -1, 1}},
      {4, 1, {0.139, 0.670}, {0.356, 0.898}, {1, -1, 1}},  {4, 2, {0.138, 0.632}, {0.294, 0.843}, {1, -1, 1}},
      {4, 3, {0.151, 0.603}, {0.259, 0.793}, {1, -1, 1}},  {4, 4, {0.162, 0.588}, {0.240, 0.759}, {1, -1, 1}},
  };
  return t;
}

// Printed derivative breakpoints that disagree with the roots of the printed
// polynomials themselves; the table above holds the roots.
struct Misprint {
  int N, m;
  std::size_t index;
  double printed;
};
const Misprint kMisprints[] = {{3, 1, 0, 0.364}, {3, 1, 1, 0.946}, {4, 1, 0, 0.138}, {4, 1, 1, 0.757}};

// Printed breakpoints are truncated to 3 decimals.
bool matches_printed(const hzeta::IsolatedRoot& r, double printed) {
  return std::abs(r.approx() - printed) <= 1e-3;
}

bool in_any_threshold(int N, const Rational& a) {
  for (const auto& r : hzeta::threshold_roots(N))
    if (r.root.contains(a)) return true;
  return false;
}

Rational random_off_threshold(int N) {
  for (;;) {
    const Rational a = testing::random_rational(0.0, 1.0);
    if (!in_any_threshold(N, a) && !hzeta::build_coefficient_family(N)[N](a).is_zero()) return a;
  }
}

}  // namespace

TEST_SUITE("sign tables") {
  TEST_CASE("breakpoints match the printed tables") {
    for (const auto& p : printed_tables()) {
      CAPTURE(p.N);
      CAPTURE(p.m);
      const auto t = hzeta::sign_table(p.N, p.m);
      std::vector<hzeta::IsolatedRoot> d, r;
      for (const auto& b : t.breakpoints) {
        if (b.root_of_derivative) d.push_back(b.root);
        if (b.root_of_poly) r.push_back(b.root);
      }
      REQUIRE(d.size() == p.derivative_roots.size());
      REQUIRE(r.size() == p.roots.size());
      for (std::size_t i = 0; i < d.size(); ++i) CHECK(matches_printed(d[i], p.derivative_roots[i]));
      for (std::size_t i = 0; i < r.size(); ++i) CHECK(matches_printed(r[i], p.roots[i]));

      std::vector<int> signs;
      for (const auto& s : t.segments) {
        CHECK(s.certified);
        if (signs.empty() || signs.back() != s.derivative_sign) signs.push_back(s.derivative_sign);
      }
      CHECK(signs == p.derivative_signs);
    }
  }

  TEST_CASE("misprinted derivative breakpoints") {
    for (const auto& mp : kMisprints) {
      CAPTURE(mp.N);
      CAPTURE(mp.printed);
      const auto t = hzeta::sign_table(mp.N, mp.m);
      std::vector<hzeta::IsolatedRoot> d;
      for (const auto& b : t.breakpoints)
        if (b.root_of_derivative) d.push_back(b.root);
      REQUIRE(d.size() > mp.index);
      CHECK_FALSE(matches_printed(d[mp.index], mp.printed));
      // the printed graph polynomial, 12 C_{3,1} or C_{4,1}, changes slope across the root
      const hzeta::RationalPoly graph =
          mp.N == 3 ? hzeta::RationalPoly({0, 2, 40, -60, -60, 72})
                    : hzeta::RationalPoly({Rational(1, 6), Rational(5, 6), Rational(-1, 2), -15, 15, 10, -10});
      const auto dg = graph.derivative();
      const Rational lo = d[mp.index].lo, hi = d[mp.index].hi;
      CHECK(dg.sign_at(lo) * dg.sign_at(hi) < 0);
    }
  }

  TEST_CASE("C_{3,3} vanishes exactly at 1/2") {
    const auto t = hzeta::sign_table(3, 3);
    bool found = false;
    for (const auto& b : t.breakpoints)
      if (b.root_of_poly) {
        REQUIRE(b.root.exact.has_value());
        CHECK(*b.root.exact == Rational(1, 2));
        found = true;
      }
    CHECK(found);
  }

  TEST_CASE("endpoint values") {
    CHECK(hzeta::sign_table(2, 0).value_lo == Rational(-1, 6));
    CHECK(hzeta::sign_table(2, 1).value_lo == Rational(0));
    CHECK(hzeta::sign_table(2, 2).value_lo == Rational(0));
    // the printed N = 3 graphs are 12 C_{3,m}
    CHECK(Rational(12) * hzeta::sign_table(3, 0).value_lo == Rational(-2));
    const Rational at_zero[] = {Rational(1, 6), Rational(1, 6), Rational(1, 60), Rational(0), Rational(0)};
    for (int m = 0; m <= 4; ++m) CHECK(hzeta::sign_table(4, m).value_lo == at_zero[m]);
  }

  TEST_CASE("arrows agree with sampled values") {
    for (const auto& p : printed_tables()) {
      const auto t = hzeta::sign_table(p.N, p.m);
      for (const auto& s : t.segments) {
        const Rational width = s.hi - s.lo;
        if (width < Rational(1, 1000)) continue;
        Rational prev = t.poly(s.lo);
        for (int k = 1; k <= 10; ++k) {
          const Rational x = s.lo + width * Rational(k, 10);
          const Rational v = t.poly(x);
          if (s.arrow == hzeta::Monotonicity::Increasing)
            CHECK(v > prev);
          else
            CHECK(v < prev);
          prev = v;
        }
      }
    }
  }

  TEST_CASE("rendered text") {
    const std::string text = hzeta::render_sign_table(hzeta::sign_table(2, 0));
    for (const char* s : {"-1/6", "0.128", "0.402", "0.744", "0.962"}) CHECK(text.find(s) != std::string::npos);
    CHECK(text.find("C_{2,0}'(a)") != std::string::npos);
  }

  TEST_CASE("custom interval covers the four real roots of C_{2,0}") {
    const auto t = hzeta::sign_table(2, 0, Rational(-2), Rational(2));
    int roots = 0;
    for (const auto& b : t.breakpoints) roots += b.root_of_poly;
    CHECK(roots == 4);
  }
}

TEST_SUITE("ordering") {
  TEST_CASE("chains hold") {
    const std::map<int, std::size_t> sizes = {{2, 6}, {3, 5}, {4, 10}};
    for (const auto& [N, size] : sizes) {
      const auto o = hzeta::ordering_check(N);
      CAPTURE(N);
      CHECK(o.holds);
      CHECK(o.witness.empty());
      REQUIRE(o.roots.size() == size);
      for (std::size_t i = 0; i + 1 < o.roots.size(); ++i) {
        CHECK(o.roots[i].root.hi < o.roots[i + 1].root.lo);
        CHECK(o.roots[i].label() == o.expected_chain[i]);
      }
    }
    CHECK(hzeta::ordering_check(2).expected_chain.front() == "c_{2,2,1}");
    CHECK(hzeta::ordering_check(4).expected_chain.back() == "c_{4,0,2}");
  }

  TEST_CASE("isolating intervals are certified") {
    for (int N = 2; N <= 4; ++N)
      for (const auto& r : hzeta::threshold_roots(N)) {
        const auto& C = hzeta::build_coefficient_family(N)[r.m];
        if (r.root.exact) {
          CHECK(C(*r.root.exact).is_zero());
          continue;
        }
        CHECK(hzeta::sturm_count(C, r.root.lo, r.root.hi) == 1);
        CHECK(C.sign_at(r.root.lo) * C.sign_at(r.root.hi) < 0);
      }
  }

  TEST_CASE("uncovered N") {
    CHECK_THROWS_AS(hzeta::published_chain(5), hzeta::CaseNotCovered);
    CHECK_THROWS_AS(hzeta::ordering_check(1), hzeta::CaseNotCovered);
  }
}

TEST_SUITE("vieta") {
  TEST_CASE("N = 2") {
    CHECK(hzeta::vieta_signs(2, Rational(1, 4)).product < 0);
    CHECK(hzeta::vieta_signs(2, Rational(1, 10)).all_same_sign);
    CHECK(hzeta::vieta_signs(2, Rational(1, 10)).product > 0);
    CHECK(hzeta::vieta_signs(2, Rational(1, 10)).sum < 0);
  }

  TEST_CASE("N = 3 between c_{3,3,1} and c_{3,1,1}") {
    for (const Rational& a : {Rational(52, 100), Rational(58, 100), Rational(61, 100)}) {
      const auto v = hzeta::vieta_signs(3, a);
      CHECK(v.product > 0);
      CHECK_FALSE(v.all_same_sign);
    }
  }

  TEST_CASE("degenerate leading coefficient") {
    CHECK_THROWS_AS(hzeta::vieta_signs(3, Rational(1, 2)), hzeta::DegenerateLeading);
  }
}

TEST_SUITE("positive root verdict") {
  TEST_CASE("worked cases") {
    const auto v2 = hzeta::positive_root_verdict(2, Rational(1, 10));
    CHECK(v2.verdict == hzeta::RootVerdict::None);
    CHECK(v2.rationale == hzeta::CaseRationale::AllSameSign);
    CHECK(v2.agrees_with_oracle);

    const auto v3 = hzeta::positive_root_verdict(3, Rational(2, 3));
    CHECK(v3.verdict == hzeta::RootVerdict::ExactlyOne);
    CHECK(v3.rationale == hzeta::CaseRationale::ConstantTermOpposite);
    CHECK(v3.oracle_count == 1);

    const auto v4 = hzeta::positive_root_verdict(4, Rational(3, 10));
    CHECK(v4.verdict == hzeta::RootVerdict::AtMostOne);
    CHECK(v4.rationale == hzeta::CaseRationale::DerivativeDescent);
    CHECK(v4.agrees_with_oracle);

    const auto vv = hzeta::positive_root_verdict(2, Rational(1, 4));
    CHECK(vv.verdict == hzeta::RootVerdict::ExactlyOne);
    CHECK(vv.oracle_count == 1);

    // below c_{4,4,1} and above c_{3,0,2} every coefficient has the same sign
    CHECK(hzeta::positive_root_verdict(4, Rational(1, 5)).verdict == hzeta::RootVerdict::None);
    CHECK(hzeta::positive_root_verdict(3, Rational(3, 4)).verdict == hzeta::RootVerdict::None);
  }

  TEST_CASE("N = 1 is linear") {
    for (int k = 1; k < 20; ++k) {
      const Rational a(k, 20);
      if (in_any_threshold(1, a) || hzeta::build_coefficient_family(1)[1](a).is_zero()) continue;
      CHECK(hzeta::positive_root_verdict(1, a).agrees_with_oracle);
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(hzeta::positive_root_verdict(3, Rational(1, 2)), hzeta::DegenerateLeading);
    const auto& r = hzeta::threshold_roots(2).front().root;
    CHECK_THROWS_AS(hzeta::positive_root_verdict(2, r.midpoint()), hzeta::BoundaryCase);
    CHECK_THROWS(hzeta::positive_root_verdict(2, Rational(0)));
    CHECK_THROWS(hzeta::positive_root_verdict(5, Rational(1, 3)));
  }

  TEST_CASE("cauchy bound") {
    // x^2 - 3x + 2 has roots 1, 2
    const hzeta::RationalPoly p({Rational(2), Rational(-3), Rational(1)});
    CHECK(hzeta::cauchy_bound(p) == Rational(4));
  }

  TEST_CASE("agrees with the Sturm oracle on random a") {
    for (int N = 1; N <= 4; ++N)
      for (int trial = 0; trial < 200; ++trial) {
        const Rational a = random_off_threshold(N);
        const auto v = hzeta::positive_root_verdict(N, a);
        CAPTURE(N);
        CAPTURE(a.to_string());
        const int direct = hzeta::sturm_count(hzeta::build_coefficient_family(N).in_x(a), Rational(0), v.cauchy_bound);
        CHECK(direct == v.oracle_count);
        CHECK(v.agrees_with_oracle);
        if (v.verdict == hzeta::RootVerdict::None) CHECK(direct == 0);
        if (v.verdict == hzeta::RootVerdict::ExactlyOne) CHECK(direct == 1);
        if (v.verdict == hzeta::RootVerdict::AtMostOne) CHECK(direct <= 1);
      }
  }

  TEST_CASE("single slope zero whenever the predicate holds") {
    for (int N = 1; N <= 4; ++N)
      for (int trial = 0; trial < 60; ++trial) {
        const Rational a = random_off_threshold(N);
        const Rational bn = hzeta::bernoulli_poly(static_cast<unsigned>(N))(a);
        const Rational bn1 = hzeta::bernoulli_poly(static_cast<unsigned>(N + 1))(a);
        if ((bn * bn1).sign() >= 0) continue;
        const auto c = hzeta::certify_single_slope_zero(N, a);
        CHECK(c.exactly_one);
        CHECK(c.sign_at_zero != 0);
        CHECK(c.sign_at_zero == -c.sign_at_infinity);
      }
  }
}

TEST_SUITE("printed values") {
  // Compared at the printed precision (at most 6 significant figures).
  void check_printed(const hzeta::RationalPoly& p, const char* at, const char* printed) {
    std::string digits;
    for (const char* c = printed; *c; ++c)
      if (*c >= '0' && *c <= '9' && !(digits.empty() && *c == '0')) digits += *c;
    const int sig = std::min(6, static_cast<int>(digits.size()));
    CAPTURE(at);
    CHECK(testing::round_sig(p(Rational::parse(at)).to_double(), sig) ==
          doctest::Approx(std::stod(printed)).epsilon(1e-12));
  }

  TEST_CASE("C_{2,0} and its derivative to 6 significant figures") {
    const auto& C = hzeta::build_coefficient_family(2)[0];
    const auto dC = C.derivative();
    const std::pair<const char*, const char*> values[] = {
        {"-1.251", "-0.00334706"}, {"-1.250", "0.00911458"},  {"-0.115", "0.000708631"}, {"-0.114", "-0.00118935"},
        {"0.402", "-0.000598225"}, {"0.403", "0.000839283"}, {"0.962", "0.00376954"},   {"0.963", "-0.000230453"},
    };
    for (const auto& [at, want] : values) check_printed(C, at, want);
    const std::pair<const char*, const char*> slopes[] = {
        {"-0.873", "0.000063404"}, {"-0.872", "-0.0193418"}, {"0.128", "-0.00116582"},
        {"0.129", "0.00623973"},   {"0.744", "0.0100306"},   {"0.745", "-0.0019235"},
    };
    for (const auto& [at, want] : slopes) check_printed(dC, at, want);
  }
}
