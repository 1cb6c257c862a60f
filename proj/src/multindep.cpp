#include "multindep.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace ffrec {

namespace {

void require_nonzero(const RatFunc& f) {
  if (f.is_zero()) throw std::domain_error("zero has no multiplicative order data");
}

MultRelation normalized(long long r, long long s) {
  long long g = std::gcd(r < 0 ? -r : r, s < 0 ? -s : s);
  if (g > 1) {
    r /= g;
    s /= g;
  }
  if (r < 0 || (r == 0 && s < 0)) {
    r = -r;
    s = -s;
  }
  return {r, s};
}

}  // namespace

std::optional<MultRelation> multiplicative_relation(const RatFunc& gamma, const RatFunc& delta) {
  require_nonzero(gamma);
  require_nonzero(delta);
  if (gamma.is_constant()) return normalized(1, 0);
  if (delta.is_constant()) return normalized(0, 1);
  Divisor dg = divisor(gamma);
  Divisor dd = divisor(delta);
  if (dg.support() != dd.support()) return std::nullopt;
  const auto& [q, a] = *dg.begin();
  long long b = dd.exponent(q);
  // candidate relation from the first place; must hold everywhere
  long long r = b, s = -a;
  for (const auto& [p, e] : dg)
    if (r * e + s * dd.exponent(p) != 0) return std::nullopt;
  return normalized(r, s);
}

bool multiplicatively_independent(const RatFunc& gamma, const RatFunc& delta) {
  return !multiplicative_relation(gamma, delta).has_value();
}

Rat directional_height(const Divisor& dgamma, const Divisor& ddelta, const Rat& n, const Rat& m) {
  if (n < 0 || m < 0) throw std::domain_error("direction must be nonnegative");
  if (n == 0 && m == 0) throw std::domain_error("direction (0, 0) is undefined");
  PlaceSet places = dgamma.support();
  for (const Place& p : ddelta.support()) places.insert(p);
  places.insert(Place::infinite());
  Rat total = 0;
  for (const Place& p : places) {
    Rat term = n * Rat(dgamma.exponent(p)) - m * Rat(ddelta.exponent(p));
    if (term > 0) total += Rat(p.degree()) * term;
  }
  return total;
}

Rat directional_height(const RatFunc& gamma, const RatFunc& delta, const Rat& n, const Rat& m) {
  require_nonzero(gamma);
  require_nonzero(delta);
  Divisor dg, dd;
  if (!gamma.is_constant()) dg = divisor(gamma);
  if (!delta.is_constant()) dd = divisor(delta);
  return directional_height(dg, dd, n, m);
}

Rat independence_gap(const RatFunc& gamma, const RatFunc& delta) {
  require_nonzero(gamma);
  require_nonzero(delta);
  if (gamma.is_constant() || delta.is_constant() || !multiplicatively_independent(gamma, delta))
    throw std::domain_error("Lemma 2 hypotheses violated: inputs must be nonconstant and multiplicatively independent");
  Divisor dg = divisor(gamma);
  Divisor dd = divisor(delta);
  PlaceSet places = dg.support();
  for (const Place& p : dd.support()) places.insert(p);

  // The directional height is convex and piecewise linear on each edge of
  // {max(n,m) = 1}; its minimum is attained at an endpoint or a breakpoint
  // where some term n*nu(gamma) - m*nu(delta) changes sign.
  Rat best;
  bool have = false;
  auto consider = [&](const Rat& n, const Rat& m) {
    Rat v = directional_height(gamma, delta, n, m);
    if (!have || v < best) {
      best = v;
      have = true;
    }
  };
  consider(Rat(1), Rat(0));
  consider(Rat(0), Rat(1));
  consider(Rat(1), Rat(1));
  for (const Place& p : places) {
    long long vg = dg.exponent(p);
    long long vd = dd.exponent(p);
    // edge n = 1: breakpoint at m = vg / vd
    if (vd != 0) {
      Rat m = Rat(vg) / Rat(vd);
      if (m > 0 && m < 1) consider(Rat(1), m);
    }
    // edge m = 1: breakpoint at n = vd / vg
    if (vg != 0) {
      Rat n = Rat(vd) / Rat(vg);
      if (n > 0 && n < 1) consider(n, Rat(1));
    }
  }
  return best;
}

Rat effective_lprime(const RatFunc& gamma, const RatFunc& delta, const Rat& l) {
  if (l < 0) throw std::domain_error("height bound must be nonnegative");
  Rat kappa = independence_gap(gamma, delta);
  return l / kappa;
}

}  // namespace ffrec
