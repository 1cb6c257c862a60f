#include "verify.hpp"

#include "jsonio.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace ffrec;
using testing::pl;
using testing::rf;

namespace {

TheoremInstance instance(const std::string& config) {
  return scan_config_from_json(Json::parse(config)).instance;
}

const char* kMonomial = R"({
  "G": {"terms": [{"coeff": ["1"], "root": "x"}]},
  "H": {"terms": [{"coeff": ["1"], "root": "x+1"}]},
  "mu": "inf", "grid": {"n_max": 10, "m_max": 10}
})";

PlaceSet places(std::initializer_list<const char*> specs) {
  PlaceSet s;
  for (const char* p : specs) s.insert(place_from_spec(p));
  return s;
}

// audit route: pointwise evaluation, no shared power cache
RatFunc inst_eval_direct(const TheoremInstance& inst, unsigned long long n, unsigned long long m) {
  return inst.a() * evaluate(inst.g(), n) - inst.b() * evaluate(inst.h(), m);
}

}  // namespace

TEST_CASE("Brownawell-Masser checker") {
  std::vector<RatFunc> units{rf("x"), rf("-1-x")};
  InequalityCheck c = check_brownawell_masser(units, places({"x", "x+1", "inf"}), 0);
  CHECK(c.lhs == 1);
  CHECK(c.rhs == 3);
  CHECK(c.holds);

  // u1 = x^3, S = joint support of x^3 and -1-x^3; |S| weighted by degree
  std::vector<RatFunc> cubes{rf("x^3"), rf("-1-x^3")};
  PlaceSet s = minimal_s(cubes);
  CHECK(s == places({"x", "x+1", "x^2-x+1", "inf"}));
  CHECK(weighted_size(s) == 5);
  InequalityCheck c3 = check_brownawell_masser(cubes, s, 0);
  CHECK(c3.lhs == 3);
  CHECK(c3.rhs == 5);
  CHECK(c3.holds);

  // Mason-Stothers near-tightness: 1 + x^6 - (1 + x^6) with lhs 6, rhs 8
  std::vector<RatFunc> sixth{rf("x^6"), rf("-1-x^6")};
  InequalityCheck c6 = check_brownawell_masser(sixth, minimal_s(sixth), 0);
  CHECK(c6.lhs == 6);
  CHECK(c6.rhs == 8);
  CHECK(c6.holds);
}

TEST_CASE("Brownawell-Masser named precondition failures") {
  std::vector<RatFunc> not_identity{rf("x"), rf("-x")};
  CHECK_THROWS_WITH_AS(check_brownawell_masser(not_identity, places({"x", "inf"}), 0),
                       "identity fails: 1 + sum u_i = 1", std::domain_error);

  std::vector<RatFunc> missing_place{rf("x"), rf("-1-x")};
  CHECK_THROWS_WITH_AS(check_brownawell_masser(missing_place, places({"x", "inf"}), 0),
                       "u_2 is not an S-unit", std::domain_error);

  std::vector<RatFunc> subsum{rf("-1"), rf("x"), rf("-x")};
  CHECK_THROWS_WITH_AS(
      check_brownawell_masser(subsum, places({"x", "inf"}), 0),
      "vanishing proper subsum at positions 0,1", std::domain_error);
}

TEST_CASE("Zannier checker") {
  std::vector<RatFunc> phis{rf("x"), rf("1")};
  InequalityCheck c = check_zannier(phis, 2, places({"x", "inf"}), 0);
  CHECK(c.lhs == 0);
  CHECK(c.rhs == 0);
  CHECK(c.holds);

  std::vector<RatFunc> three{rf("x^2"), rf("x"), rf("1")};
  InequalityCheck c3 = check_zannier(three, 3, places({"x", "inf"}), 0);
  CHECK(c3.lhs == 0);
  CHECK(c3.rhs == 0);
  CHECK(c3.holds);

  // r < n contributes heights of the unconstrained functions
  std::vector<RatFunc> mixed{rf("x^2+1"), rf("x")};
  InequalityCheck cm = check_zannier(mixed, 1, places({"x^2+1", "x", "inf"}), 0);
  CHECK(cm.rhs == weighted_size(places({"x^2+1", "x", "inf"})) - 2 + 1);
  CHECK(cm.holds);

  std::vector<RatFunc> dependent{rf("x"), rf("2*x")};
  CHECK_THROWS_WITH_AS(check_zannier(dependent, 2, places({"x", "inf"}), 0),
                       "not linearly independent over the constants", std::domain_error);

  std::vector<RatFunc> pole_outside{rf("1/(x-1)"), rf("x")};
  CHECK_THROWS_WITH_AS(check_zannier(pole_outside, 0, places({"x", "inf"}), 0),
                       "pole of phi_1 not in S: x-1", std::domain_error);

  std::vector<RatFunc> zero_outside{rf("x-2"), rf("1")};
  CHECK_THROWS_WITH_AS(check_zannier(zero_outside, 1, places({"inf"}), 0),
                       "zero of phi_1 not in S: x-2", std::domain_error);
}

TEST_CASE("summand values") {
  TheoremInstance mono = instance(kMonomial);
  auto v11 = summand_values(mono, 1, 1);
  REQUIRE(v11.size() == 2);
  CHECK(v11[0] == rf("x"));
  CHECK(v11[1] == rf("-(x+1)"));

  auto v00 = summand_values(mono, 0, 0);
  CHECK(v00[0] == rf("1"));
  CHECK(v00[1] == rf("-1"));

  // a(n) = (2x+2) + (x+1)n = (x+1)(n+2): single summand P(n) pi alpha^n
  TheoremInstance shifted = instance(R"({
    "G": {"terms": [{"coeff": ["2*x+2", "x+1"], "root": "x"}]},
    "H": {"terms": [{"coeff": ["1"], "root": "x+1"}]},
    "mu": "inf", "grid": {"n_max": 5, "m_max": 5}
  })");
  auto v3 = summand_values(shifted, 3, 1);
  REQUIRE(v3.size() == 2);
  CHECK(v3[0] == rf("5*(x+1)*x^3"));
}

TEST_CASE("independence check with certificates") {
  std::vector<RatFunc> ind{rf("x"), rf("x+1")};
  CHECK_FALSE(dependence_certificate(ind).has_value());

  std::vector<RatFunc> dep{rf("x"), rf("2*x"), rf("x+1")};
  auto cert = dependence_certificate(dep);
  REQUIRE(cert);
  CHECK(*cert == std::vector<Rat>{Rat(2), Rat(-1), Rat(0)});
  // certificate kills the combination
  RatFunc combo;
  for (std::size_t i = 0; i < dep.size(); ++i) combo = combo + RatFunc((*cert)[i]) * dep[i];
  CHECK(combo.is_zero());

  std::vector<RatFunc> powers{rf("1"), rf("x"), rf("x^2")};
  CHECK_FALSE(dependence_certificate(powers).has_value());

  std::vector<RatFunc> with_zero{rf("x"), RatFunc{}};
  CHECK_THROWS_WITH_AS(dependence_certificate(with_zero), "zero entry", std::domain_error);
}

TEST_CASE("minimal vanishing subsum") {
  std::vector<RatFunc> v{rf("1"), rf("x"), rf("-x"), rf("-1")};
  auto w = minimal_vanishing_subsum(v);
  REQUIRE(w);
  CHECK(w->indices == std::vector<std::size_t>{0, 3});

  std::vector<RatFunc> none{rf("x"), rf("x+1")};
  CHECK_FALSE(minimal_vanishing_subsum(none).has_value());

  std::vector<RatFunc> full{rf("x"), rf("1"), rf("-x-1")};
  auto wf = minimal_vanishing_subsum(full);
  REQUIRE(wf);
  CHECK(wf->indices == std::vector<std::size_t>{0, 1, 2});

  std::vector<RatFunc> too_many(21, rf("1"));
  CHECK_THROWS_AS(minimal_vanishing_subsum(too_many), std::domain_error);
}

TEST_CASE("minimal vanishing subsum agrees with mask enumeration") {
  std::mt19937_64 rng(18);
  std::uniform_int_distribution<int> pick(-2, 2);
  const RatFunc basis[] = {rf("1"), rf("x"), rf("x+1")};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<RatFunc> values;
    std::uniform_int_distribution<std::size_t> len(1, 7);
    std::size_t k = len(rng);
    for (std::size_t i = 0; i < k; ++i) {
      RatFunc v;
      for (const RatFunc& b : basis) v = v + RatFunc(Rat(pick(rng))) * b;
      values.push_back(v);
    }
    // independent route: scan all masks, keep the best (size, lexicographic)
    std::optional<std::vector<std::size_t>> best;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      RatFunc sum;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) {
          sum = sum + values[i];
          idx.push_back(i);
        }
      if (!sum.is_zero()) continue;
      if (!best || idx.size() < best->size() || (idx.size() == best->size() && idx < *best))
        best = idx;
    }
    auto got = minimal_vanishing_subsum(values);
    if (best) {
      REQUIRE(got);
      CHECK(got->indices == *best);
    } else {
      CHECK_FALSE(got.has_value());
    }
  }
}

TEST_CASE("monomial scan gap pattern") {
  TheoremInstance mono = instance(kMonomial);
  ScanReport report = scan_theorem1(mono, 10, 10);
  CHECK(report.zeros.empty());
  CHECK(report.gn_zeros.empty());
  CHECK(report.alerts.empty());
  CHECK(report.threshold == 0);
  REQUIRE(report.empirical_c);
  CHECK(*report.empirical_c == 1);
  for (unsigned long long n = 1; n <= 10; ++n)
    for (unsigned long long m = 1; m <= 10; ++m) {
      long long gap = report.gap(n, m).value();
      if (n == m)
        CHECK(gap == 1);
      else if (n > m)
        CHECK(gap == 0);
      else
        CHECK(gap == static_cast<long long>(n) - static_cast<long long>(m));
    }
}

TEST_CASE("scan rejects failed hypotheses by name") {
  TheoremInstance dep = instance(R"({
    "G": {"terms": [{"coeff": ["1"], "root": "x"}]},
    "H": {"terms": [{"coeff": ["1"], "root": "x"}]},
    "b": "2", "mu": "inf", "grid": {"n_max": 5, "m_max": 5}
  })");
  CHECK_THROWS_AS(scan_theorem1(dep, 5, 5), std::domain_error);

  TheoremInstance const_root = instance(R"({
    "G": {"terms": [{"coeff": ["1"], "root": "x"}]},
    "H": {"terms": [{"coeff": ["1"], "root": "2"}]},
    "mu": "inf", "grid": {"n_max": 5, "m_max": 5}
  })");
  CHECK_NOTHROW(scan_theorem1(const_root, 5, 5));
  CHECK_THROWS_WITH_AS(scan_theorem2(const_root, 5, 5),
                       "hypothesis failed: no constant characteristic root in H",
                       std::domain_error);
}

TEST_CASE("theorem 2 region covers the boundary strips") {
  TheoremInstance mono = instance(kMonomial);
  ScanReport t2 = scan_theorem2(mono, 12, 3);
  CHECK(t2.theorem == 2);
  CHECK(t2.in_region(1, 1));  // max(1,1) > 0
  REQUIRE(t2.empirical_c);
  CHECK(*t2.empirical_c == 1);
  for (unsigned long long m = 1; m <= 3; ++m)
    for (unsigned long long n = 1; n <= 12; ++n) CHECK(t2.gap(n, m).value() <= 1);
}

TEST_CASE("regions differ between the theorems when c0 is positive") {
  // G_n = (x-1)(n-2) x^n has P(n) = 1 - n/2, so c0_initial = 2 and G_2 = 0
  TheoremInstance shifted = instance(R"({
    "G": {"terms": [{"coeff": ["-2*x+2", "x-1"], "root": "x"}]},
    "H": {"terms": [{"coeff": ["1"], "root": "x+1"}]},
    "mu": "inf", "grid": {"n_max": 8, "m_max": 8}
  })");
  ScanReport r = scan_theorem1(shifted, 8, 8);
  CHECK(r.threshold == 2);
  CHECK_FALSE(r.in_region(2, 5));
  CHECK(r.in_region(3, 3));
  // the G_2 = 0 row is recorded, not silently dropped
  REQUIRE(r.gn_zeros.size() == 8);
  CHECK(r.gn_zeros.front() == std::pair<unsigned long long, unsigned long long>{2, 1});
  CHECK(r.cell(2, 1).mu_gn.is_infinite());
}

TEST_CASE("sporadic zero of the difference is segregated and alerted") {
  // G_n = x^n + 1, H_m = (x+1)^m: G_1 = H_1, a zero inside the region
  TheoremInstance z = instance(R"({
    "G": {"terms": [{"coeff": ["1"], "root": "x"}, {"coeff": ["1"], "root": "1"}]},
    "H": {"terms": [{"coeff": ["1"], "root": "x+1"}]},
    "mu": "inf", "grid": {"n_max": 6, "m_max": 6}
  })");
  ScanReport r = scan_theorem1(z, 6, 6);
  REQUIRE(r.zeros.size() == 1);
  CHECK(r.zeros[0] == std::pair<unsigned long long, unsigned long long>{1, 1});
  CHECK(r.alerts == r.zeros);
  CHECK(r.cell(1, 1).mu_diff.is_infinite());
  REQUIRE(r.empirical_c);
  // the zero cell does not enter the finite-gap maximum
  for (const auto& [n, m] : r.zeros) CHECK(r.in_region(n, m));
}

TEST_CASE("scan soundness: cells recompute from direct evaluation") {
  TheoremInstance mix = instance(R"({
    "G": {"terms": [{"coeff": ["1"], "root": "x+1"}, {"coeff": ["1"], "root": "x"}]},
    "H": {"terms": [{"coeff": ["1"], "root": "x^2+x+1"}]},
    "mu": "inf", "grid": {"n_max": 12, "m_max": 12}
  })");
  ScanReport r = scan_theorem1(mix, 12, 12);
  CHECK(r.zeros.empty());
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<unsigned long long> cell(1, 12);
  for (int i = 0; i < 10; ++i) {
    unsigned long long n = cell(rng), m = cell(rng);
    RatFunc direct = inst_eval_direct(mix, n, m);
    CHECK(r.cell(n, m).mu_diff == valuation(Place::infinite(), direct));
    CHECK(r.cell(n, m).mu_gn == valuation(Place::infinite(), evaluate(mix.g(), n)));
  }
}

TEST_CASE("corollary degree check on polynomial fixtures") {
  TheoremInstance mono = instance(kMonomial);
  CorollaryReport c = check_corollary_degrees(mono, 10, 10);
  CHECK(c.holds);
  CHECK(c.empirical_c == 1);
  CHECK(c.violations.empty());

  TheoremInstance rational = instance(R"json({
    "G": {"terms": [{"coeff": ["1"], "root": "x/(x+1)"}]},
    "H": {"terms": [{"coeff": ["1"], "root": "x-1"}]},
    "mu": "inf", "grid": {"n_max": 5, "m_max": 5}
  })json");
  CHECK_THROWS_AS(check_corollary_degrees(rational, 5, 5), std::domain_error);

  TheoremInstance finite_mu = instance(R"({
    "G": {"terms": [{"coeff": ["1"], "root": "x"}]},
    "H": {"terms": [{"coeff": ["1"], "root": "x+1"}]},
    "mu": "x", "grid": {"n_max": 5, "m_max": 5}
  })");
  CHECK_THROWS_WITH_AS(check_corollary_degrees(finite_mu, 5, 5),
                       "Corollary 1 requires mu to be the infinite place", std::domain_error);
}

TEST_CASE("csv export golden") {
  TheoremInstance mono = instance(kMonomial);
  ScanReport r = scan_theorem1(mono, 2, 2);
  CHECK(scan_to_csv(r) ==
        "n,m,mu_diff,mu_Gn,gap\n"
        "1,1,0,-1,1\n"
        "1,2,-2,-1,-1\n"
        "2,1,-2,-2,0\n"
        "2,2,-1,-2,1\n");
}

TEST_CASE("scan summary json carries the verdict") {
  TheoremInstance mono = instance(kMonomial);
  Json j = scan_summary_json(scan_theorem1(mono, 5, 5));
  CHECK(j["empirical_C"] == 1);
  CHECK(j["threshold"] == 0);
  CHECK(j["zeros"].empty());
  CHECK(j["constants"]["C_aux"] == 3);
  bool all_pass = true;
  for (const Json& c : j["hypotheses"]) all_pass = all_pass && c["pass"].get<bool>();
  CHECK(all_pass);
}

TEST_CASE("deterministic under thread caps") {
  TheoremInstance mono = instance(kMonomial);
  setenv("FFREC_THREADS", "1", 1);
  std::string csv1 = scan_to_csv(scan_theorem1(mono, 9, 9));
  setenv("FFREC_THREADS", "4", 1);
  std::string csv4 = scan_to_csv(scan_theorem1(mono, 9, 9));
  unsetenv("FFREC_THREADS");
  CHECK(csv1 == csv4);
}
