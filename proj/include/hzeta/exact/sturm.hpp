#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hzeta/exact/poly.hpp"
#include "hzeta/exact/rational.hpp"

namespace hzeta {

/// Endpoint perturbation used when the polynomial vanishes at a query
/// endpoint: endpoints move inward by k * kEndpointEpsilon, k = 1..3.
Rational endpoint_epsilon();
inline constexpr int kEndpointPerturbations = 3;

/// Default width of refined isolating intervals: 10^-9.
Rational default_isolation_tolerance();

/// Signed remainder sequence p, p', -rem(p, p'), ... over exact rationals.
/// Each member is scaled by a positive constant so its leading coefficient
/// has magnitude 1; this leaves all sign-variation counts unchanged.
class SturmSequence {
 public:
  explicit SturmSequence(const RationalPoly& p);

  const RationalPoly& poly() const { return chain_.front(); }
  std::size_t length() const { return chain_.size(); }

  /// Number of sign variations at x (zeros skipped).
  int variations(const Rational& x) const;

  /// Distinct real roots in (lo, hi); requires p(lo) != 0 and p(hi) != 0.
  int count(const Rational& lo, const Rational& hi) const;

 private:
  RationalPoly original_;
  std::vector<RationalPoly> chain_;
};

/// Distinct real roots of p in the open interval (lo, hi). Endpoints where p
/// vanishes are nudged inward (see endpoint_epsilon); throws EndpointRoot if
/// the perturbation budget is exhausted.
int sturm_count(const RationalPoly& p, const Rational& lo, const Rational& hi);

/// Interval (lo, hi) certified to contain exactly one real root of a
/// polynomial. When the root is rational and bisection landed on it, `exact`
/// carries its value.
struct IsolatedRoot {
  std::string poly_id;
  Rational lo;
  Rational hi;
  int sign_lo = 0;
  int sign_hi = 0;
  std::optional<Rational> exact;

  Rational midpoint() const { return (lo + hi) / Rational(2); }
  Rational width() const { return hi - lo; }
  double approx() const { return exact ? exact->to_double() : midpoint().to_double(); }
  /// Closed-interval membership.
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool overlaps(const IsolatedRoot& o) const { return !(hi < o.lo || o.hi < lo); }
};

/// All distinct real roots of p in (lo, hi), ascending, each bracketed by
/// exact-rational bisection to width <= tolerance.
std::vector<IsolatedRoot> isolate_roots(const RationalPoly& p, const Rational& lo,
                                        const Rational& hi,
                                        const Rational& tolerance = default_isolation_tolerance(),
                                        const std::string& poly_id = {});

/// Shrinks an isolating interval of `sturm.poly()` to width <= width.
void refine_root(IsolatedRoot& root, const SturmSequence& sturm, const Rational& width);

}  // namespace hzeta
