#pragma once

#include "hzeta/exact/poly.hpp"
#include "hzeta/exact/rational.hpp"

namespace hzeta {

/// B_n with the convention B_1 = -1/2, from sum_{k<=n} C(n+1,k) B_k = 0.
/// Memoized; concurrent readers are safe and the first fill is serialized.
Rational bernoulli_number(unsigned n);

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
RationalPoly bernoulli_poly(unsigned n);

/// B_n / n! in binary64. Used by the float kernels.
double bernoulli_over_factorial(unsigned n);

}  // namespace hzeta
