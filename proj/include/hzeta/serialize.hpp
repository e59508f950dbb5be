#pragma once

#include <json.hpp>

#include "hzeta/analysis.hpp"
#include "hzeta/exact/poly.hpp"
#include "hzeta/exact/rational.hpp"
#include "hzeta/exact/sturm.hpp"
#include "hzeta/kernels.hpp"
#include "hzeta/zeros.hpp"

// Canonical JSON forms. Field order is fixed (ordered_json), so dumping a
// parsed document reproduces it byte for byte.

namespace hzeta {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);  // "p/q", "/1" omitted
Json to_json(const RationalPoly& p);  // array of rationals, index = degree
Json to_json(const IsolatedRoot& r);
Json to_json(const CoeffFamily& f);
Json to_json(const SignTable& t);
Json to_json(const OrderingResult& o);
Json to_json(const PositiveRootVerdict& v);
Json to_json(const ZeroReport& z);
Json to_json(const CrossingReport& c);

Rational rational_from_json(const Json& j);
RationalPoly poly_from_json(const Json& j);

/// Shortest representation that parses back to the same double.
Json float_json(double x);

/// One-line dump used for every document the CLI prints.
std::string dump(const Json& j);

}  // namespace hzeta
