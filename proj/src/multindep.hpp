#pragma once

#include "places.hpp"

#include <optional>

namespace ffrec {

// Witness that gamma^r * delta^s is a nonzero constant, with gcd(|r|,|s|) = 1
// and the first nonzero component positive.
struct MultRelation {
  long long r = 0;
  long long s = 0;
};

// nullopt means multiplicatively independent. Dependence of two elements of
// Q(x)* modulo constants is exactly proportionality of their divisor
// exponent vectors; constants are dependent on everything via (1,0)/(0,1).
std::optional<MultRelation> multiplicative_relation(const RatFunc& gamma, const RatFunc& delta);

bool multiplicatively_independent(const RatFunc& gamma, const RatFunc& delta);

// H(gamma^n / delta^m) extended to nonnegative rational directions:
// sum over places of deg * max(0, n*nu(gamma) - m*nu(delta)).
// Positively homogeneous of degree 1 in (n, m).
Rat directional_height(const RatFunc& gamma, const RatFunc& delta, const Rat& n, const Rat& m);

// Same function on precomputed divisors; avoids refactoring the inputs when
// evaluating many directions.
Rat directional_height(const Divisor& dgamma, const Divisor& ddelta, const Rat& n, const Rat& m);

// kappa = min of directional_height over {n, m >= 0, max(n, m) = 1};
// strictly positive iff the (nonconstant) inputs are independent. Computed
// exactly from the breakpoints of the piecewise-linear directional height.
Rat independence_gap(const RatFunc& gamma, const RatFunc& delta);

// L' = L / kappa: whenever H(gamma^n / delta^m) <= L, max(n, m) <= L'.
// Requires nonconstant, multiplicatively independent inputs.
Rat effective_lprime(const RatFunc& gamma, const RatFunc& delta, const Rat& l);

}  // namespace ffrec
