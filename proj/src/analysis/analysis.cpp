#include "hzeta/analysis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "hzeta/errors.hpp"
#include "hzeta/exact/bernoulli.hpp"
#include "hzeta/kernels.hpp"

namespace hzeta {
namespace {

const Rational& refinement_floor() {
  static const Rational floor = Rational::pow10(-30);
  return floor;
}

std::string poly_name(int N, int m, bool derivative) {
  std::ostringstream os;
  os << "C_{" << N << "," << m << "}" << (derivative ? "'" : "");
  return os.str();
}

struct Tracked {
  IsolatedRoot root;
  const SturmSequence* sturm;
};

// Halves overlapping intervals until the family is pairwise disjoint.
void separate(std::vector<Tracked>& items) {
  for (;;) {
    std::sort(items.begin(), items.end(),
              [](const Tracked& x, const Tracked& y) { return x.root.lo < y.root.lo; });
    bool clash = false;
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      auto& lhs = items[i];
      auto& rhs = items[i + 1];
      if (!lhs.root.overlaps(rhs.root)) continue;
      clash = true;
      if (lhs.root.width() <= refinement_floor() && rhs.root.width() <= refinement_floor())
        throw RefinementBudgetExceeded("roots of " + lhs.root.poly_id + " and " + rhs.root.poly_id +
                                       " not separated at width 1e-30");
      for (Tracked* t : {&lhs, &rhs}) {
        const Rational target = t->root.width() / Rational(2);
        refine_root(t->root, *t->sturm, std::max(target, refinement_floor()));
      }
    }
    if (!clash) return;
  }
}

std::string cell_label(const IsolatedRoot& r) {
  if (r.exact) return r.exact->to_string();
  return r.lo.to_decimal(3) + "…";
}

std::string sign_glyph(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

}  // namespace

SignTable sign_table(int N, int m, const Rational& lo, const Rational& hi, const Rational& tolerance) {
  if (N < 1 || N > 4 || m < 0 || m > N) throw DomainError("sign_table needs 1 <= N <= 4, 0 <= m <= N");
  if (!(lo < hi)) throw DomainError("sign_table needs lo < hi");
  SignTable t;
  t.N = N;
  t.m = m;
  t.lo = lo;
  t.hi = hi;
  t.poly = build_coefficient_family(N)[m];
  t.derivative = t.poly.derivative();
  t.value_lo = t.poly(lo);
  t.value_hi = t.poly(hi);
  t.derivative_lo = t.derivative(lo);
  t.derivative_hi = t.derivative(hi);

  const SturmSequence sp(t.poly);
  const SturmSequence sd(t.derivative);
  std::vector<Tracked> items;
  for (auto& r : isolate_roots(t.poly, lo, hi, tolerance, poly_name(N, m, false))) items.push_back({r, &sp});
  if (!t.derivative.is_zero())
    for (auto& r : isolate_roots(t.derivative, lo, hi, tolerance, poly_name(N, m, true)))
      items.push_back({r, &sd});
  separate(items);

  for (const auto& it : items) {
    Breakpoint b;
    b.root = it.root;
    const Rational probe = it.root.exact ? *it.root.exact : it.root.midpoint();
    if (it.sturm == &sp) {
      b.root_of_poly = true;
      b.derivative_sign = t.derivative.sign_at(probe);
    } else {
      b.root_of_derivative = true;
      b.value_sign = t.poly.sign_at(probe);
    }
    t.breakpoints.push_back(std::move(b));
  }

  Rational left = lo;
  for (std::size_t i = 0; i <= t.breakpoints.size(); ++i) {
    const Rational right = i < t.breakpoints.size() ? t.breakpoints[i].root.lo : hi;
    SignSegment seg;
    seg.lo = left;
    seg.hi = right;
    if (t.derivative.is_zero()) {
      seg.derivative_sign = 0;
      seg.certified = true;
    } else {
      seg.derivative_sign = t.derivative.sign_at((left + right) / Rational(2));
      seg.certified = sturm_count(t.derivative, left, right) == 0 && seg.derivative_sign != 0;
    }
    seg.arrow = seg.derivative_sign >= 0 ? Monotonicity::Increasing : Monotonicity::Decreasing;
    t.segments.push_back(seg);
    if (i < t.breakpoints.size()) left = t.breakpoints[i].root.hi;
  }
  return t;
}

std::string render_sign_table(const SignTable& t) {
  // columns: lo, seg0, bp0, seg1, ..., bp_{k-1}, seg_k, hi
  std::vector<std::string> head{t.lo.to_string()}, drow, vrow;
  const auto& segs = t.segments;
  drow.push_back(sign_glyph(segs.front().derivative_sign));
  vrow.push_back(t.value_lo.to_string());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    head.push_back("⋯");
    drow.push_back(sign_glyph(segs[i].derivative_sign));
    vrow.push_back(segs[i].derivative_sign > 0 ? "↗" : (segs[i].derivative_sign < 0 ? "↘" : "→"));
    if (i < t.breakpoints.size()) {
      const auto& b = t.breakpoints[i];
      head.push_back(cell_label(b.root));
      drow.push_back(b.root_of_derivative ? "0" : sign_glyph(b.derivative_sign));
      vrow.push_back(b.root_of_poly ? "0" : "");
    }
  }
  head.push_back(t.hi.to_string());
  drow.push_back(sign_glyph(segs.back().derivative_sign));
  vrow.push_back(t.value_hi.to_string());

  const std::string name = poly_name(t.N, t.m, false);
  std::vector<std::string> labels{"a", name + "'(a)", name + "(a)"};
  std::vector<std::vector<std::string>*> rows{&head, &drow, &vrow};

  // display width, counting each UTF-8 code point once
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
      return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
  };
  std::size_t label_w = 0;
  for (const auto& l : labels) label_w = std::max(label_w, width(l));
  std::vector<std::size_t> col_w(head.size(), 0);
  for (auto* r : rows)
    for (std::size_t c = 0; c < r->size(); ++c) col_w[c] = std::max(col_w[c], width((*r)[c]));

  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << labels[r] << std::string(label_w - width(labels[r]), ' ') << " |";
    for (std::size_t c = 0; c < rows[r]->size(); ++c) {
      const auto& cell = (*rows[r])[c];
      os << ' ' << cell << std::string(col_w[c] - width(cell), ' ');
    }
    os << '\n';
  }
  os << "breakpoints:\n";
  for (const auto& b : t.breakpoints) {
    os << "  " << b.root.poly_id << " root in [" << b.root.lo.to_decimal(12) << ", " << b.root.hi.to_decimal(12)
       << "]";
    if (b.root.exact) os << " exactly " << b.root.exact->to_string();
    os << '\n';
  }
  return os.str();
}

std::string LabeledRoot::label() const {
  std::ostringstream os;
  os << "c_{" << N << "," << m << "," << index << "}";
  return os.str();
}

std::vector<std::pair<int, int>> published_chain(int N) {
  switch (N) {
    case 2:
      return {{2, 1}, {1, 1}, {0, 1}, {2, 2}, {1, 2}, {0, 2}};
    case 3:
      return {{0, 1}, {3, 1}, {2, 1}, {1, 1}, {0, 2}};
    case 4:
      return {{4, 1}, {3, 1}, {2, 1}, {1, 1}, {0, 1}, {4, 2}, {3, 2}, {2, 2}, {1, 2}, {0, 2}};
    default:
      throw CaseNotCovered("no ordering chain for N = " + std::to_string(N));
  }
}

const std::vector<LabeledRoot>& threshold_roots(int N) {
  if (N < 1) throw DomainError("threshold_roots needs N >= 1");
  static std::mutex mu;
  static std::map<int, std::vector<LabeledRoot>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(N); it != cache.end()) return it->second;

  const auto& family = build_coefficient_family(N);
  std::vector<SturmSequence> sturms;
  sturms.reserve(static_cast<std::size_t>(N) + 1);
  for (int m = 0; m <= N; ++m) sturms.emplace_back(family[m]);

  std::vector<Tracked> items;
  for (int m = 0; m <= N; ++m)
    for (auto& r : isolate_roots(family[m], Rational(0), Rational(1), default_isolation_tolerance(),
                                 poly_name(N, m, false)))
      items.push_back({r, &sturms[static_cast<std::size_t>(m)]});
  separate(items);

  std::vector<LabeledRoot> out;
  std::vector<int> next(static_cast<std::size_t>(N) + 1, 1);
  for (auto& it : items) {
    const int m = static_cast<int>(it.sturm - sturms.data());
    out.push_back({N, m, next[static_cast<std::size_t>(m)]++, it.root});
  }
  return cache.emplace(N, std::move(out)).first->second;
}

OrderingResult ordering_check(int N) {
  OrderingResult res;
  res.N = N;
  const auto chain = published_chain(N);
  res.roots = threshold_roots(N);
  for (auto [m, i] : chain) res.expected_chain.push_back(LabeledRoot{N, m, i, {}}.label());

  std::vector<std::string> found;
  for (const auto& r : res.roots) found.push_back(r.label());
  res.holds = found == res.expected_chain;
  if (!res.holds) {
    std::size_t k = 0;
    while (k < found.size() && k < res.expected_chain.size() && found[k] == res.expected_chain[k]) ++k;
    std::ostringstream os;
    os << "position " << k + 1 << ": expected "
       << (k < res.expected_chain.size() ? res.expected_chain[k] : std::string("end of chain")) << ", found "
       << (k < found.size() ? found[k] + " near " + res.roots[k].root.lo.to_decimal(6) : std::string("end of roots"));
    res.witness = os.str();
  }
  return res;
}

VietaSigns vieta_signs(int N, const Rational& a) {
  if (N != 2 && N != 3) throw DomainError("vieta_signs needs N in {2, 3}");
  const auto& family = build_coefficient_family(N);
  std::vector<int> s;
  for (int m = 0; m <= N; ++m) s.push_back(family[m].sign_at(a));
  const int lead = s[static_cast<std::size_t>(N)];
  if (lead == 0) throw DegenerateLeading("C_{" + std::to_string(N) + "," + std::to_string(N) + "}(a) = 0");
  VietaSigns v;
  v.N = N;
  v.all_same_sign = std::all_of(s.begin(), s.end(), [&](int x) { return x == lead; });
  if (N == 2) {
    v.sum = -s[1] * lead;
    v.product = s[0] * lead;
  } else {
    v.sum = -s[2] * lead;
    v.pair_sum = s[1] * lead;
    v.product = -s[0] * lead;
  }
  return v;
}

std::string to_string(RootVerdict v) {
  switch (v) {
    case RootVerdict::None:
      return "None";
    case RootVerdict::ExactlyOne:
      return "ExactlyOne";
    case RootVerdict::AtMostOne:
      return "AtMostOne";
  }
  return "?";
}

std::string to_string(CaseRationale r) {
  switch (r) {
    case CaseRationale::AllSameSign:
      return "all-same-sign";
    case CaseRationale::ConstantTermOpposite:
      return "constant-term-opposite";
    case CaseRationale::VietaProduct:
      return "vieta-product";
    case CaseRationale::DerivativeDescent:
      return "derivative-descent";
  }
  return "?";
}

Rational cauchy_bound(const RationalPoly& p) {
  if (p.degree() < 1) throw DomainError("cauchy_bound needs degree >= 1");
  const Rational lead = p.leading().abs();
  Rational best(0);
  for (int i = 0; i < p.degree(); ++i) best = max(best, p.coeff(i).abs() / lead);
  return Rational(1) + best;
}

namespace {

bool same_signs(const std::vector<int>& s, std::size_t from, std::size_t to) {
  for (std::size_t i = from + 1; i <= to; ++i)
    if (s[i] != s[from]) return false;
  return true;
}

// Descartes-style and Vieta-style tests on a coefficient sign vector
// (index = degree). Returns true when the polynomial has at most one
// positive root by one of the elementary arguments.
bool at_most_one_elementary(const std::vector<int>& s) {
  const std::size_t n = s.size() - 1;
  if (same_signs(s, 0, n)) return true;
  if (n >= 1 && same_signs(s, 1, n) && s[0] != s[1]) return true;
  if (n == 2 && s[0] * s[2] < 0) return true;
  if (n == 3 && s[0] * s[3] < 0 && s[1] * s[3] < 0) return true;
  return false;
}

}  // namespace

PositiveRootVerdict positive_root_verdict(int N, const Rational& a) {
  if (N < 1 || N > 4) throw DomainError("positive_root_verdict needs 1 <= N <= 4");
  if (a.sign() <= 0 || a >= Rational(1)) throw DomainError("positive_root_verdict needs 0 < a < 1");
  const auto& family = build_coefficient_family(N);

  PositiveRootVerdict v;
  v.N = N;
  v.a = a;
  for (int m = 0; m <= N; ++m) v.coefficient_signs.push_back(family[m].sign_at(a));
  const auto& s = v.coefficient_signs;
  const auto n = static_cast<std::size_t>(N);
  if (s[n] == 0) throw DegenerateLeading("C_{" + std::to_string(N) + "," + std::to_string(N) + "}(a) = 0");
  for (const auto& r : threshold_roots(N))
    if (r.root.contains(a))
      throw BoundaryCase("a = " + a.to_string() + " lies in the isolating interval of " + r.label());

  if (same_signs(s, 0, n)) {
    v.verdict = RootVerdict::None;
    v.rationale = CaseRationale::AllSameSign;
  } else if (same_signs(s, 1, n)) {
    v.verdict = RootVerdict::ExactlyOne;
    v.rationale = CaseRationale::ConstantTermOpposite;
  } else if ((N == 2 && s[0] * s[2] < 0) || (N == 3 && s[0] * s[3] < 0 && s[1] * s[3] < 0)) {
    v.verdict = RootVerdict::ExactlyOne;
    v.rationale = CaseRationale::VietaProduct;
  } else if (N == 4 && s[0] * s[4] < 0 && at_most_one_elementary({s[1], s[2], s[3], s[4]})) {
    // d/dx P_4 = 4C_4 x^3 + 3C_3 x^2 + 2C_2 x + C_1 has the signs of C_1..C_4
    v.verdict = RootVerdict::AtMostOne;
    v.rationale = CaseRationale::DerivativeDescent;
  } else {
    std::string pattern;
    for (int x : s) pattern += sign_glyph(x);
    throw CaseNotCovered("sign pattern " + pattern + " at a = " + a.to_string());
  }

  const RationalPoly p = family.in_x(a);
  v.cauchy_bound = cauchy_bound(p);
  v.oracle_count = sturm_count(p, Rational(0), v.cauchy_bound);
  switch (v.verdict) {
    case RootVerdict::None:
      v.agrees_with_oracle = v.oracle_count == 0;
      break;
    case RootVerdict::ExactlyOne:
      v.agrees_with_oracle = v.oracle_count == 1;
      break;
    case RootVerdict::AtMostOne:
      v.agrees_with_oracle = v.oracle_count <= 1;
      break;
  }
  return v;
}

SlopeZeroCertificate certify_single_slope_zero(int N, const Rational& a) {
  SlopeZeroCertificate c;
  c.verdict = positive_root_verdict(N, a);
  const Rational b = Rational(1) - a;
  // N + 2 > 0, so only the Bernoulli factor matters
  c.sign_at_zero = bernoulli_poly(static_cast<unsigned>(N + 1))(b).sign();
  c.sign_at_infinity = -bernoulli_poly(static_cast<unsigned>(N))(b).sign();
  // d^2/dx^2 f_N = e^{ax} P_N has at most one positive zero, so d/dx f_N
  // changes sign at most twice; opposite end signs force exactly one zero.
  c.exactly_one = c.sign_at_zero != 0 && c.sign_at_infinity != 0 && c.sign_at_zero != c.sign_at_infinity;
  return c;
}

}  // namespace hzeta
