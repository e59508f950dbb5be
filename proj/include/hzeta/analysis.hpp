#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hzeta/exact/poly.hpp"
#include "hzeta/exact/rational.hpp"
#include "hzeta/exact/sturm.hpp"

namespace hzeta {

// ---------------------------------------------------------------------------
// Sign tables of C_{N,m}(a)

enum class Monotonicity { Increasing, Decreasing };

/// A root of C_{N,m} or of C_{N,m}' inside the table interval.
struct Breakpoint {
  IsolatedRoot root;
  bool root_of_poly = false;
  bool root_of_derivative = false;
  int derivative_sign = 0;  // sign of C' on the isolating interval (0 if a root of C')
  int value_sign = 0;       // sign of C on the isolating interval (0 if a root of C)
};

/// Open stretch between consecutive breakpoints (or table ends).
struct SignSegment {
  Rational lo, hi;
  int derivative_sign = 0;
  Monotonicity arrow = Monotonicity::Increasing;
  bool certified = false;  // Sturm count of C' on (lo, hi) is zero
};

struct SignTable {
  int N = 0, m = 0;
  Rational lo, hi;
  RationalPoly poly, derivative;
  std::vector<Breakpoint> breakpoints;  // ascending, pairwise disjoint
  std::vector<SignSegment> segments;    // breakpoints.size() + 1 entries
  Rational value_lo, value_hi;          // exact C(lo), C(hi)
  Rational derivative_lo, derivative_hi;
};

/// Sign table of C_{N,m} over (lo, hi), default (0, 1).
SignTable sign_table(int N, int m, const Rational& lo = Rational(0), const Rational& hi = Rational(1),
                     const Rational& tolerance = default_isolation_tolerance());

/// Aligned plain-text rendering with one row for a, C' and C.
std::string render_sign_table(const SignTable& table);

// ---------------------------------------------------------------------------
// Ordering of the roots c_{N,m,i} of C_{N,m} in (0, 1)

struct LabeledRoot {
  int N = 0, m = 0, index = 0;  // c_{N,m,index}, index counted from 1 upward in a
  IsolatedRoot root;
  std::string label() const;
};

struct OrderingResult {
  int N = 0;
  bool holds = false;
  std::vector<LabeledRoot> roots;           // ascending in a
  std::vector<std::string> expected_chain;  // labels of the published chain
  std::string witness;                      // first mismatch when !holds
};

/// The labels (m, i) of the published chain for N = 2, 3, 4, ascending.
std::vector<std::pair<int, int>> published_chain(int N);

/// All roots of C_{N,0..N} in (0,1), refined until pairwise disjoint
/// (RefinementBudgetExceeded past width 1e-30), compared to the chain.
OrderingResult ordering_check(int N);

/// The disjoint, labelled roots used by ordering_check; cached per N.
const std::vector<LabeledRoot>& threshold_roots(int N);

// ---------------------------------------------------------------------------
// Positive roots of P_N(a, x)

/// Signs of the symmetric functions of the roots of P_N(a, .) read off from
/// Vieta's formulas: the sum, the sum of pairwise products (N = 3 only, 0
/// otherwise) and the product of all roots.
struct VietaSigns {
  int N = 0;
  int sum = 0;
  int pair_sum = 0;
  int product = 0;
  bool all_same_sign = false;  // every C_{N,m}(a) has the same sign
};

/// N in {2, 3}; throws DegenerateLeading if C_{N,N}(a) = 0.
VietaSigns vieta_signs(int N, const Rational& a);

enum class RootVerdict { None, ExactlyOne, AtMostOne };
enum class CaseRationale { AllSameSign, ConstantTermOpposite, VietaProduct, DerivativeDescent };

std::string to_string(RootVerdict v);
std::string to_string(CaseRationale r);

struct PositiveRootVerdict {
  int N = 0;
  Rational a;
  RootVerdict verdict = RootVerdict::None;
  CaseRationale rationale = CaseRationale::AllSameSign;
  std::vector<int> coefficient_signs;  // sign of C_{N,m}(a), m = 0..N
  // Oracle: exact Sturm count of P_N(a, .) on (0, Cauchy bound).
  Rational cauchy_bound;
  int oracle_count = 0;
  bool agrees_with_oracle = false;
};

/// Case split on the sign pattern of C_{N,m}(a): same signs -> None;
/// constant term opposite -> ExactlyOne; Vieta product (N = 2, 3) ->
/// ExactlyOne; N = 4 derivative descent -> AtMostOne. Requires 1 <= N <= 4
/// and 0 < a < 1 outside every isolating interval of threshold_roots(N)
/// (BoundaryCase otherwise). CaseNotCovered signals a sign pattern outside
/// the argument.
PositiveRootVerdict positive_root_verdict(int N, const Rational& a);

/// Cauchy bound 1 + max |c_i / c_deg| on the magnitude of every root.
Rational cauchy_bound(const RationalPoly& p);

/// Combines the verdict with the signs of d/dx f_N at x = 0 and x -> inf.
struct SlopeZeroCertificate {
  PositiveRootVerdict verdict;
  int sign_at_zero = 0;      // sign of (N+2) B_{N+1}(1-a)
  int sign_at_infinity = 0;  // -sign B_N(1-a)
  bool exactly_one = false;  // d/dx f_N has exactly one zero in x > 0
};

SlopeZeroCertificate certify_single_slope_zero(int N, const Rational& a);

}  // namespace hzeta
