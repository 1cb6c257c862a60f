#include "multindep.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <cstdlib>
#include <numeric>

using namespace ffrec;
using testing::pl;
using testing::rf;

TEST_CASE("independence examples") {
  CHECK(multiplicatively_independent(rf("x"), rf("x+1")));

  auto rel = multiplicative_relation(rf("x^2"), rf("x^3"));
  REQUIRE(rel);
  CHECK(rel->r == 3);
  CHECK(rel->s == -2);

  auto rel2 = multiplicative_relation(rf("(x-1)/x"), rf("x/(x-1)"));
  REQUIRE(rel2);
  CHECK(rel2->r == 1);
  CHECK(rel2->s == 1);

  CHECK_THROWS_AS(multiplicative_relation(RatFunc{}, rf("x")), std::domain_error);
}

TEST_CASE("constants are dependent on everything") {
  auto rel = multiplicative_relation(rf("5"), rf("x"));
  REQUIRE(rel);
  CHECK(rel->r == 1);
  CHECK(rel->s == 0);
  auto rel2 = multiplicative_relation(rf("x"), rf("5"));
  REQUIRE(rel2);
  CHECK(rel2->r == 0);
  CHECK(rel2->s == 1);
  REQUIRE(multiplicative_relation(rf("3"), rf("7")));
}

TEST_CASE("returned relations are sound") {
  std::mt19937_64 rng(11);
  const RatFunc p = rf("x");
  const RatFunc q = rf("x^2+1");
  std::uniform_int_distribution<long long> e(-3, 3);
  int dependent_seen = 0;
  for (int i = 0; i < 80; ++i) {
    RatFunc gamma = pow(p, e(rng)) * pow(q, e(rng));
    RatFunc delta = pow(p, e(rng)) * pow(q, e(rng));
    if (gamma.is_zero() || delta.is_zero()) continue;
    auto rel = multiplicative_relation(gamma, delta);
    if (!rel) continue;
    ++dependent_seen;
    CHECK((rel->r != 0 || rel->s != 0));
    CHECK(std::gcd(std::abs(rel->r), std::abs(rel->s)) == 1);
    RatFunc combo = pow(gamma, rel->r) * pow(delta, rel->s);
    CHECK(combo.is_constant());
    CHECK_FALSE(combo.is_zero());
    Divisor total;
    for (const auto& [pl_, ex] : divisor(gamma)) total.add(pl_, rel->r * ex);
    for (const auto& [pl_, ex] : divisor(delta)) total.add(pl_, rel->s * ex);
    CHECK(total.empty());
  }
  CHECK(dependent_seen > 0);
}

TEST_CASE("oracle equivalence for monomial pairs") {
  // gamma = p^a q^b, delta = p^e q^f: dependence within |r|,|s| <= 12 is an
  // integer statement about the exponents, checked by brute force
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long long> e(-4, 4);
  const RatFunc p = rf("x+1");
  const RatFunc q = rf("x-2");
  for (int i = 0; i < 60; ++i) {
    long long a = e(rng), b = e(rng), ee = e(rng), f = e(rng);
    if ((a == 0 && b == 0) || (ee == 0 && f == 0)) continue;
    RatFunc gamma = pow(p, a) * pow(q, b);
    RatFunc delta = pow(p, ee) * pow(q, f);
    bool brute_dependent = false;
    for (long long r = -12; r <= 12 && !brute_dependent; ++r)
      for (long long s = -12; s <= 12; ++s) {
        if (r == 0 && s == 0) continue;
        if (r * a + s * ee == 0 && r * b + s * f == 0) {
          brute_dependent = true;
          break;
        }
      }
    CHECK(multiplicative_relation(gamma, delta).has_value() == brute_dependent);
  }
}

TEST_CASE("directional height examples") {
  CHECK(directional_height(rf("x"), rf("x+1"), Rat(2), Rat(3)) == Rat(3));
  CHECK(directional_height(rf("x"), rf("x"), Rat(1), Rat(1)) == Rat(0));
  // homogeneity
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    RatFunc g = testing::random_ratfunc(rng, 4, 10);
    RatFunc d = testing::random_ratfunc(rng, 4, 10);
    Rat n(7, 3), m(2, 5), t(11, 4);
    CHECK(directional_height(g, d, t * n, t * m) == t * directional_height(g, d, n, m));
  }
  // integer directions agree with the height of the actual quotient
  for (int i = 0; i < 25; ++i) {
    RatFunc g = testing::random_ratfunc(rng, 3, 8);
    RatFunc d = testing::random_ratfunc(rng, 3, 8);
    for (long long n = 0; n <= 3; ++n)
      for (long long m = 0; m <= 3; ++m) {
        if (n == 0 && m == 0) continue;
        RatFunc quotient = pow(g, n) / pow(d, m);
        if (quotient.is_zero()) continue;
        CHECK(directional_height(g, d, Rat(n), Rat(m)) == Rat(height_finite(quotient)));
      }
  }
  CHECK_THROWS_AS(directional_height(rf("x"), rf("x"), Rat(0), Rat(0)), std::domain_error);
}

TEST_CASE("effective L-prime examples") {
  CHECK(effective_lprime(rf("x"), rf("x+1"), Rat(10)) == Rat(10));
  CHECK(effective_lprime(rf("x^2"), rf("x+1"), Rat(10)) == Rat(10));
  CHECK(effective_lprime(rf("x"), rf("x+1"), Rat(0)) == Rat(0));
  CHECK(independence_gap(rf("x"), rf("x+1")) == Rat(1));
  CHECK(independence_gap(rf("x^2"), rf("x+1")) == Rat(1));

  CHECK_THROWS_WITH_AS(effective_lprime(rf("x^2"), rf("x^3"), Rat(5)),
                       "Lemma 2 hypotheses violated: inputs must be nonconstant and "
                       "multiplicatively independent",
                       std::domain_error);
  CHECK_THROWS_AS(effective_lprime(rf("3"), rf("x"), Rat(5)), std::domain_error);
}

TEST_CASE("kappa bounds the directional height from below") {
  std::mt19937_64 rng(14);
  int tested = 0;
  while (tested < 25) {
    RatFunc g = testing::random_ratfunc(rng, 3, 6);
    RatFunc d = testing::random_ratfunc(rng, 3, 6);
    if (g.is_constant() || d.is_constant() || !multiplicatively_independent(g, d)) continue;
    ++tested;
    Rat kappa = independence_gap(g, d);
    CHECK(kappa > 0);
    // brute-force grid minimisation never beats the breakpoint minimum
    for (long long n = 0; n <= 20; ++n)
      for (long long m = 0; m <= 20; ++m) {
        if (n == 0 && m == 0) continue;
        Rat dh = directional_height(g, d, Rat(n), Rat(m));
        CHECK(dh >= kappa * Rat(std::max(n, m)));
      }
  }
}

TEST_CASE("L-prime certifies the index bound on a fine grid") {
  // whenever H(gamma^n / delta^m) <= L, max(n, m) <= L'
  const RatFunc gamma = rf("x^2*(x+1)");
  const RatFunc delta = rf("x/(x-1)");
  REQUIRE(multiplicatively_independent(gamma, delta));
  const Rat l(12);
  Rat lp = effective_lprime(gamma, delta, l);
  for (long long n = 0; n <= 30; ++n)
    for (long long m = 0; m <= 30; ++m) {
      if (n == 0 && m == 0) continue;
      if (directional_height(gamma, delta, Rat(n), Rat(m)) <= l)
        CHECK(Rat(std::max(n, m)) <= lp);
    }
}
