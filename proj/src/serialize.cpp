#include "hzeta/serialize.hpp"

#include <cmath>

#include "hzeta/errors.hpp"

namespace hzeta {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const RationalPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const IsolatedRoot& r) {
  Json j;
  j["poly"] = r.poly_id;
  j["lo"] = to_json(r.lo);
  j["hi"] = to_json(r.hi);
  j["sign_lo"] = r.sign_lo;
  j["sign_hi"] = r.sign_hi;
  j["exact"] = r.exact ? to_json(*r.exact) : Json(nullptr);
  j["approx"] = float_json(r.approx());
  return j;
}

Json to_json(const CoeffFamily& f) {
  Json j;
  j["N"] = f.N;
  Json c = Json::array();
  for (const auto& p : f.coeffs) c.push_back(to_json(p));
  j["C"] = std::move(c);
  return j;
}

Json to_json(const SignTable& t) {
  Json j;
  j["N"] = t.N;
  j["m"] = t.m;
  j["interval"] = {to_json(t.lo), to_json(t.hi)};
  j["poly"] = to_json(t.poly);
  j["derivative"] = to_json(t.derivative);
  j["value_lo"] = to_json(t.value_lo);
  j["value_hi"] = to_json(t.value_hi);
  j["derivative_lo"] = to_json(t.derivative_lo);
  j["derivative_hi"] = to_json(t.derivative_hi);
  Json bps = Json::array();
  for (const auto& b : t.breakpoints) {
    Json e;
    e["root"] = to_json(b.root);
    e["kind"] = b.root_of_poly ? "value" : "derivative";
    e["derivative_sign"] = b.derivative_sign;
    e["value_sign"] = b.value_sign;
    bps.push_back(std::move(e));
  }
  j["breakpoints"] = std::move(bps);
  Json segs = Json::array();
  for (const auto& s : t.segments) {
    Json e;
    e["lo"] = to_json(s.lo);
    e["hi"] = to_json(s.hi);
    e["derivative_sign"] = s.derivative_sign;
    e["arrow"] = s.arrow == Monotonicity::Increasing ? "increasing" : "decreasing";
    e["certified"] = s.certified;
    segs.push_back(std::move(e));
  }
  j["segments"] = std::move(segs);
  return j;
}

Json to_json(const OrderingResult& o) {
  Json j;
  j["N"] = o.N;
  j["holds"] = o.holds;
  j["chain"] = o.expected_chain;
  Json roots = Json::array();
  for (const auto& r : o.roots) {
    Json e;
    e["label"] = r.label();
    e["lo"] = to_json(r.root.lo);
    e["hi"] = to_json(r.root.hi);
    e["approx"] = float_json(r.root.approx());
    roots.push_back(std::move(e));
  }
  j["roots"] = std::move(roots);
  j["witness"] = o.holds ? Json(nullptr) : Json(o.witness);
  return j;
}

Json to_json(const PositiveRootVerdict& v) {
  Json j;
  j["N"] = v.N;
  j["a"] = to_json(v.a);
  j["verdict"] = to_string(v.verdict);
  j["rationale"] = to_string(v.rationale);
  j["coefficient_signs"] = v.coefficient_signs;
  j["cauchy_bound"] = to_json(v.cauchy_bound);
  j["oracle_count"] = v.oracle_count;
  j["agrees_with_oracle"] = v.agrees_with_oracle;
  return j;
}

Json to_json(const ZeroReport& z) {
  Json j;
  j["N"] = z.N;
  j["a"] = to_json(z.a);
  j["a_input"] = z.a_input ? float_json(*z.a_input) : Json(nullptr);
  j["exists"] = z.exists;
  if (z.exists) {
    j["zero"] = float_json(z.zero);
    j["bracket"] = {float_json(z.bracket.first), float_json(z.bracket.second)};
    j["derivative"] = float_json(z.derivative);
    j["simplicity_evidence"] = z.simplicity_evidence;
    j["residual"] = float_json(z.residual);
  }
  return j;
}

Json to_json(const CrossingReport& c) {
  Json j;
  j["N"] = c.N;
  j["a"] = to_json(c.a);
  j["x0"] = float_json(c.x0);
  j["pattern"] = c.pattern == CrossingPattern::NegThenPos ? "NegThenPos" : "PosThenNeg";
  j["residual"] = float_json(c.residual);
  j["search_limit"] = float_json(c.search_limit);
  return j;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a JSON string");
  return Rational::parse(j.get<std::string>());
}

RationalPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return RationalPoly(std::move(c));
}

Json float_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace hzeta
