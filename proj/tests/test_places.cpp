#include "places.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace ffrec;
using testing::pl;
using testing::rf;

namespace {

RatFunc random_nonzero(std::mt19937_64& rng, std::size_t deg = 10, long long height = 50) {
  return testing::random_ratfunc(rng, deg, height, true);
}

// reference height through the divisor, for the dual-route identity
long long height_via_divisor(const RatFunc& f) {
  long long total = 0;
  for (const auto& [p, e] : divisor(f))
    if (e > 0) total += p.degree() * e;
  return total;
}

}  // namespace

TEST_CASE("valuation examples") {
  Place at_zero = Place::finite(pl("x"));
  CHECK(valuation(at_zero, rf("x^3/(x-1)")) == ExtInt(3));
  CHECK(valuation(Place::infinite(), rf("(x^2+1)/x^5")) == ExtInt(3));
  CHECK(valuation(Place::finite(pl("x-1")), RatFunc{}).is_infinite());
  CHECK(valuation(at_zero, rf("(x-1)/x^2")) == ExtInt(-2));
  CHECK(valuation(Place::infinite(), rf("x^3")) == ExtInt(-3));
  CHECK(valuation(Place::finite(pl("x^2+1")), rf("(x^2+1)^2*(x+3)")) == ExtInt(2));
}

TEST_CASE("divisor examples and the sum formula") {
  Divisor d = divisor(rf("(x^2+1)/x^5"));
  CHECK(d.size() == 3);
  CHECK(d.exponent(Place::finite_unchecked(pl("x^2+1"))) == 1);
  CHECK(d.exponent(Place::finite_unchecked(pl("x"))) == -5);
  CHECK(d.exponent(Place::infinite()) == 3);
  CHECK(d.weighted_degree() == 0);
  CHECK(d.to_string() == "x:-5 x^2+1:1 inf:3");

  CHECK(divisor(rf("7")).empty());
  Divisor e = divisor(rf("x-1"));
  CHECK(e.to_string() == "x-1:1 inf:-1");

  CHECK_THROWS_WITH_AS(divisor(RatFunc{}), "zero has no divisor", std::domain_error);
}

TEST_CASE("height examples") {
  CHECK(height(rf("(x^2+1)/x^5")) == ExtInt(5));
  CHECK(height(rf("1/3")) == ExtInt(0));
  CHECK(height(rf("(x+1)^3")) == ExtInt(3));
  CHECK(height(RatFunc{}).is_infinite());
  CHECK_THROWS_AS(height_finite(RatFunc{}), std::domain_error);
}

TEST_CASE("sum formula and height identity on random elements") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    RatFunc f = random_nonzero(rng, 8, 30);
    CHECK(divisor(f).weighted_degree() == 0);
    long long h = height_finite(f);
    CHECK(h == static_cast<long long>(std::max(f.num().degree(), f.den().degree())));
    CHECK(h == height_via_divisor(f));
  }
}

TEST_CASE("height laws (Lemma 1 suite, randomized)") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long long> exp_dist(-8, 8);
  for (int i = 0; i < 150; ++i) {
    RatFunc f = random_nonzero(rng, 6, 20);
    RatFunc g = random_nonzero(rng, 6, 20);
    long long hf = height_finite(f), hg = height_finite(g);
    CHECK(hf >= 0);
    CHECK(height_finite(f.reciprocal()) == hf);
    if (!(f + g).is_zero()) {
      long long hsum = height_finite(f + g);
      CHECK(hf - hg <= hsum);
      CHECK(hsum <= hf + hg);
    }
    long long hprod = height_finite(f * g);
    CHECK(hf - hg <= hprod);
    CHECK(hprod <= hf + hg);
    long long n = exp_dist(rng);
    CHECK(height(pow(f, n)) == ExtInt(std::abs(n) * hf));
    CHECK((hf == 0) == f.is_constant());
    Poly a = testing::random_poly(rng, 4, 10);
    if (!a.is_zero() && !apply_poly(a, f).is_zero())
      CHECK(height_finite(apply_poly(a, f)) ==
            static_cast<long long>(a.is_constant() ? 0 : a.degree()) * hf);
  }
}

TEST_CASE("valuation laws") {
  std::mt19937_64 rng(10);
  const Place places[] = {Place::infinite(), Place::finite(pl("x")), Place::finite(pl("x^2+1"))};
  for (int i = 0; i < 100; ++i) {
    RatFunc f = random_nonzero(rng, 6, 20);
    RatFunc g = random_nonzero(rng, 6, 20);
    for (const Place& p : places) {
      long long vf = valuation(p, f).value();
      long long vg = valuation(p, g).value();
      CHECK(valuation(p, f * g) == ExtInt(vf + vg));
      ExtInt vsum = valuation(p, f + g);
      CHECK(ExtInt(std::min(vf, vg)) <= vsum);
      if (vf != vg) CHECK(vsum == ExtInt(std::min(vf, vg)));
    }
  }
}

TEST_CASE("extended integers") {
  ExtInt inf = ExtInt::infinity();
  CHECK((inf + ExtInt(5)).is_infinite());
  CHECK((inf + inf).is_infinite());
  CHECK((inf - ExtInt(3)).is_infinite());
  CHECK_THROWS_AS(ExtInt(1) - inf, std::domain_error);
  CHECK_THROWS_AS(inf - inf, std::domain_error);
  CHECK_THROWS_AS(inf.value(), std::domain_error);
  CHECK(ExtInt(4) < inf);
  CHECK(!(inf < inf));
  CHECK(min(inf, ExtInt(-2)) == ExtInt(-2));
  CHECK(ExtInt(3) - ExtInt(5) == ExtInt(-2));
  CHECK(inf.to_string() == "inf");
}

TEST_CASE("S-unit membership") {
  PlaceSet s{Place::finite(pl("x")), Place::finite(pl("x+1")), Place::infinite()};
  CHECK(is_s_unit(rf("x/(x+1)"), s));
  CHECK_FALSE(is_s_unit(rf("x-2"), PlaceSet{Place::finite(pl("x")), Place::infinite()}));
  CHECK(is_s_unit(rf("5"), PlaceSet{}));
  CHECK_THROWS_AS(is_s_unit(RatFunc{}, s), std::domain_error);
}

TEST_CASE("minimal_s unions supports") {
  std::vector<RatFunc> fs{rf("x"), rf("x+1")};
  PlaceSet s = minimal_s(fs, PlaceSet{Place::infinite()});
  CHECK(s == PlaceSet{Place::finite(pl("x")), Place::finite(pl("x+1")), Place::infinite()});
  CHECK(weighted_size(s) == 3);

  std::vector<RatFunc> ones{rf("1")};
  CHECK(minimal_s(ones).empty());

  std::vector<RatFunc> mixed{rf("(x^2+1)/x")};
  PlaceSet extra{Place::finite(pl("x-1"))};
  PlaceSet t = minimal_s(mixed, extra);
  CHECK(t == PlaceSet{Place::finite(pl("x")), Place::finite(pl("x-1")),
                      Place::finite(pl("x^2+1")), Place::infinite()});
  CHECK(weighted_size(t) == 5);

  std::vector<RatFunc> bad{RatFunc{}};
  CHECK_THROWS_AS(minimal_s(bad), std::domain_error);
}

TEST_CASE("place validation and rendering") {
  CHECK(Place::finite(pl("2*x+2")).poly() == pl("x+1"));  // made monic
  CHECK_THROWS_AS(Place::finite(pl("x^2-1")), std::domain_error);
  CHECK_THROWS_AS(Place::finite(pl("5")), std::domain_error);
  try {
    Place::finite(pl("x^2-1"));
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()) == "polynomial is not irreducible; factors: x-1 x+1");
  }
  CHECK(Place::infinite().to_string() == "inf");
  CHECK(Place::finite(pl("x^2+1")).to_string() == "x^2+1");
  CHECK(Place::infinite().degree() == 1);
  CHECK(Place::finite(pl("x^2+1")).degree() == 2);
  // finite places order by (degree, coefficients); inf comes last
  CHECK(Place::finite(pl("x")) < Place::finite(pl("x+1")));
  CHECK(Place::finite(pl("x+1")) < Place::finite(pl("x^2+1")));
  CHECK(Place::finite(pl("x^2+1")) < Place::infinite());
}
