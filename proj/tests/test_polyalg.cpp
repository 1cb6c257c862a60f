#include "ratfunc.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace ffrec;
using testing::pl;
using testing::rf;

TEST_CASE("normalize reduces and makes the denominator monic") {
  RatFunc f(pl("2*x+2"), pl("4*x"));
  CHECK(f.num() == pl("1/2*x+1/2"));
  CHECK(f.den() == pl("x"));
  // cross-multiply: (2x+2) * x = 4x * ((1/2)x + 1/2)
  CHECK(pl("2*x+2") * f.den() == pl("4*x") * f.num());

  RatFunc zero(Poly{}, pl("x^3"));
  CHECK(zero.is_zero());
  CHECK(zero.den() == pl("1"));

  RatFunc g(pl("x^2-1"), pl("x-1"));
  CHECK(g.num() == pl("x+1"));
  CHECK(g.den() == pl("1"));
  CHECK(pl("x+1") * pl("x-1") == pl("x^2-1"));
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(RatFunc(pl("x"), Poly{}), std::domain_error);
  CHECK_THROWS_AS(rf("1") / RatFunc{}, std::domain_error);
  CHECK_THROWS_AS(RatFunc{}.reciprocal(), std::domain_error);
}

TEST_CASE("degree of the zero polynomial is not an integer") {
  CHECK_THROWS_AS(Poly{}.degree(), std::domain_error);
  CHECK_THROWS_AS(Poly{}.leading(), std::domain_error);
  CHECK(Poly{}.is_zero());
  CHECK(pl("0").is_zero());
}

TEST_CASE("gcd basics") {
  CHECK(gcd(pl("x^2-1"), pl("x-1")) == pl("x-1"));
  CHECK(gcd(pl("x^2"), pl("x+1")) == pl("1"));
  CHECK_THROWS_AS(gcd(Poly{}, Poly{}), std::domain_error);
  CHECK(gcd(Poly{}, pl("3*x")) == pl("x"));
}

TEST_CASE("gcd of common-factor products recovers the factor") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    Poly f = testing::random_poly(rng, 4, 10);
    Poly g = testing::random_poly(rng, 3, 10);
    Poly h = testing::random_poly(rng, 3, 10);
    if (gcd(g, h) != pl("1") || f.is_constant()) continue;
    Poly d = gcd(f * g, f * h);
    // d = monic f times the content-free gcd of (g, h) = monic f
    CHECK(d == f.monic());
  }
}

TEST_CASE("gcd times lcm equals the product up to a unit") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    Poly a = testing::random_poly(rng, 6, 20);
    Poly b = testing::random_poly(rng, 6, 20);
    Poly g = gcd(a, b);
    Poly l = lcm(a, b);
    Poly prod = a * b;
    CHECK((g * l).monic() == prod.monic());
  }
}

TEST_CASE("eval, pow, compose, division examples") {
  CHECK(pl("x^2+1").eval(Rat(2)) == Rat(5));
  CHECK(pow(pl("x+1"), 3) == pl("x^3+3*x^2+3*x+1"));
  RatFunc q = rf("x^2-1") / rf("x-1");
  CHECK(q == rf("x+1"));
  CHECK(q.den() == pl("1"));
  CHECK(pl("x^2+1").compose(pl("x-1")) == pl("x^2-2*x+2"));
  CHECK(pl("x^2+1").derivative() == pl("2*x"));
}

TEST_CASE("rational function field axioms on random triples") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    RatFunc a = testing::random_ratfunc(rng, 4, 8, false);
    RatFunc b = testing::random_ratfunc(rng, 4, 8, false);
    RatFunc c = testing::random_ratfunc(rng, 4, 8, false);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RatFunc{});
    if (!a.is_zero()) CHECK(a / a == rf("1"));
  }
}

TEST_CASE("normalization is idempotent and canonical") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    RatFunc f = testing::random_ratfunc(rng, 6, 20, false);
    RatFunc again(f.num(), f.den());
    CHECK(f == again);
    CHECK(f.den().is_monic());
    if (!f.is_zero()) CHECK(gcd(f.num(), f.den()) == pl("1"));
    // scaled representative normalizes to the same canonical form
    RatFunc scaled(Rat(7, 3) * f.num(), Rat(7, 3) * f.den());
    CHECK(scaled == f);
  }
}

TEST_CASE("pow handles negative exponents and rejects 0^-1") {
  CHECK(pow(rf("x"), -2) == rf("1/x^2"));
  CHECK(pow(rf("x+1"), 0) == rf("1"));
  CHECK_THROWS_AS(pow(RatFunc{}, -1), std::domain_error);
}

TEST_CASE("apply_poly matches direct substitution") {
  // A(T) = T^2 + 3, f = x/(x+1)
  RatFunc f = rf("x/(x+1)");
  CHECK(apply_poly(pl("x^2+3"), f) == f * f + rf("3"));
}

TEST_CASE("poly ordering is degree first, then coefficients") {
  CHECK(compare(pl("x"), pl("x+1")) < 0);
  CHECK(compare(pl("x-1"), pl("x")) < 0);
  CHECK(compare(pl("x+1"), pl("x^2")) < 0);
  CHECK(compare(pl("5"), pl("5")) == 0);
  CHECK(compare(Poly{}, pl("1")) < 0);
}
