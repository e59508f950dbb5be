#include "hzeta/exact/sturm.hpp"

#include <algorithm>
#include <stdexcept>

#include "hzeta/errors.hpp"

namespace hzeta {

Rational endpoint_epsilon() { return Rational::pow10(-120); }

Rational default_isolation_tolerance() { return Rational::pow10(-9); }

SturmSequence::SturmSequence(const RationalPoly& p) : original_(p) {
  if (p.is_zero()) throw std::invalid_argument("SturmSequence: zero polynomial");
  auto scaled = [](const RationalPoly& q) { return q.leading().abs().inverse() * q; };
  chain_.push_back(scaled(p));
  if (p.degree() == 0) return;
  chain_.push_back(scaled(p.derivative()));
  while (true) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    RationalPoly r = -a.divmod(b).second;
    if (r.is_zero()) break;
    chain_.push_back(scaled(r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  return variations(lo) - variations(hi);
}

namespace {

struct Endpoints {
  Rational lo, hi;
};

Endpoints nudge_endpoints(const RationalPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm: require lo < hi");
  const Rational eps = endpoint_epsilon();
  auto nudge = [&](const Rational& x, int direction) {
    Rational y = x;
    for (int k = 1; p.sign_at(y) == 0; ++k) {
      if (k > kEndpointPerturbations)
        throw EndpointRoot("polynomial vanishes near endpoint " + x.to_string());
      y = x + Rational(direction * k) * eps;
    }
    return y;
  };
  return {nudge(lo, +1), nudge(hi, -1)};
}

IsolatedRoot make_root(const RationalPoly& p, const std::string& id, Rational lo, Rational hi) {
  IsolatedRoot r;
  r.poly_id = id;
  r.sign_lo = p.sign_at(lo);
  r.sign_hi = p.sign_at(hi);
  r.lo = std::move(lo);
  r.hi = std::move(hi);
  return r;
}

// Half-width for a bracket around an exact root `mid` that stays strictly
// inside (lo, hi) and only contains `mid`.
Rational exact_half_width(const SturmSequence& s, const Rational& mid, const Rational& lo,
                          const Rational& hi, const Rational& width) {
  Rational delta = min(width / Rational(4), min(mid - lo, hi - mid) / Rational(2));
  const Rational two(2);
  while (s.poly().sign_at(mid - delta) == 0 || s.poly().sign_at(mid + delta) == 0 ||
         s.count(mid - delta, mid + delta) != 1)
    delta /= two;
  return delta;
}

}  // namespace

int sturm_count(const RationalPoly& p, const Rational& lo, const Rational& hi) {
  const auto e = nudge_endpoints(p, lo, hi);
  if (p.degree() == 0) return 0;
  return SturmSequence(p).count(e.lo, e.hi);
}

void refine_root(IsolatedRoot& root, const SturmSequence& sturm, const Rational& width) {
  const RationalPoly& p = sturm.poly();
  const Rational two(2);
  while (root.width() > width) {
    if (root.exact) {
      const Rational delta = exact_half_width(sturm, *root.exact, root.lo, root.hi, width);
      root.lo = *root.exact - delta;
      root.hi = *root.exact + delta;
      root.sign_lo = p.sign_at(root.lo);
      root.sign_hi = p.sign_at(root.hi);
      return;
    }
    const Rational mid = root.midpoint();
    const int s = p.sign_at(mid);
    if (s == 0) {
      root.exact = mid;
      continue;
    }
    bool go_left;
    if (root.sign_lo != root.sign_hi) {
      go_left = s != root.sign_lo;
    } else {
      // even-multiplicity root: no sign change, fall back on counting
      go_left = sturm.count(root.lo, mid) == 1;
    }
    if (go_left) {
      root.hi = mid;
      root.sign_hi = s;
    } else {
      root.lo = mid;
      root.sign_lo = s;
    }
  }
}

std::vector<IsolatedRoot> isolate_roots(const RationalPoly& p, const Rational& lo,
                                        const Rational& hi, const Rational& tolerance,
                                        const std::string& poly_id) {
  if (tolerance.sign() <= 0) throw std::invalid_argument("isolate_roots: tolerance must be > 0");
  const auto e = nudge_endpoints(p, lo, hi);
  std::vector<IsolatedRoot> out;
  if (p.degree() == 0) return out;
  const SturmSequence sturm(p);

  struct Work {
    Rational lo, hi;
    int count;
  };
  std::vector<Work> stack{{e.lo, e.hi, sturm.count(e.lo, e.hi)}};
  const Rational two(2);
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    if (w.count == 0) continue;
    if (w.count == 1) {
      IsolatedRoot r = make_root(p, poly_id, w.lo, w.hi);
      refine_root(r, sturm, tolerance);
      out.push_back(std::move(r));
      continue;
    }
    const Rational mid = (w.lo + w.hi) / two;
    if (p.sign_at(mid) == 0) {
      const Rational delta = exact_half_width(sturm, mid, w.lo, w.hi, tolerance);
      IsolatedRoot r = make_root(p, poly_id, mid - delta, mid + delta);
      r.exact = mid;
      out.push_back(std::move(r));
      Rational left_hi = mid - delta, right_lo = mid + delta;
      const int left = sturm.count(w.lo, left_hi);
      const int right = sturm.count(right_lo, w.hi);
      stack.push_back({w.lo, std::move(left_hi), left});
      stack.push_back({std::move(right_lo), w.hi, right});
      continue;
    }
    const int left = sturm.count(w.lo, mid);
    stack.push_back({w.lo, mid, left});
    stack.push_back({mid, w.hi, w.count - left});
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace hzeta
