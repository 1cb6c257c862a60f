#include "jsonio.hpp"

#include "factor.hpp"
#include "parse.hpp"

#include <sstream>

namespace ffrec {

namespace {

// rethrows parse failures with the offending source and a caret attached
RatFunc parse_expr(const std::string& text) {
  try {
    return parse_ratfunc(text);
  } catch (const ParseError& e) {
    throw ParseError(format_parse_error(e, text), e.position());
  }
}

Poly parse_poly_expr(const std::string& text) {
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw ParseError(format_parse_error(e, text), e.position());
  }
}

}  // namespace

LinearRecurrence recurrence_from_json(const Json& j) {
  std::vector<RecTerm> terms;
  for (const Json& t : j.at("terms")) {
    std::vector<RatFunc> coeffs;
    for (const Json& c : t.at("coeff")) coeffs.push_back(parse_expr(c.get<std::string>()));
    RatFunc root = parse_expr(t.at("root").get<std::string>());
    terms.push_back({CoeffPoly(std::move(coeffs)), std::move(root)});
  }
  return LinearRecurrence(std::move(terms));
}

Place place_from_spec(const std::string& spec) {
  std::string trimmed;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed == "inf") return Place::infinite();
  return Place::finite(parse_poly_expr(spec));
}

ScanConfig scan_config_from_json(const Json& j) {
  LinearRecurrence g = recurrence_from_json(j.at("G"));
  LinearRecurrence h = recurrence_from_json(j.at("H"));
  RatFunc a = parse_expr(j.value("a", "1"));
  RatFunc b = parse_expr(j.value("b", "1"));
  Place mu = place_from_spec(j.at("mu").get<std::string>());
  long long genus = j.value("genus", 0LL);
  const Json& grid = j.at("grid");
  unsigned long long n_max = grid.at("n_max").get<unsigned long long>();
  unsigned long long m_max = grid.at("m_max").get<unsigned long long>();
  return {TheoremInstance(std::move(g), std::move(h), std::move(a), std::move(b), std::move(mu),
                          genus),
          n_max, m_max};
}

namespace {

PlaceSet place_set_from_json(const Json& j) {
  PlaceSet s;
  for (const Json& p : j) s.insert(place_from_spec(p.get<std::string>()));
  return s;
}

}  // namespace

BmInstanceConfig bm_from_json(const Json& j) {
  BmInstanceConfig out;
  for (const Json& u : j.at("units")) out.units.push_back(parse_expr(u.get<std::string>()));
  out.genus = j.value("genus", 0LL);
  if (j.contains("S"))
    out.s = place_set_from_json(j.at("S"));
  else
    out.s = minimal_s(out.units);
  return out;
}

ZannierInstanceConfig zannier_from_json(const Json& j) {
  ZannierInstanceConfig out;
  for (const Json& p : j.at("phis")) out.phis.push_back(parse_expr(p.get<std::string>()));
  out.r = j.at("r").get<std::size_t>();
  out.genus = j.value("genus", 0LL);
  if (j.contains("S")) {
    out.s = place_set_from_json(j.at("S"));
  } else {
    for (std::size_t i = 0; i < out.phis.size(); ++i) {
      if (out.phis[i].is_zero()) continue;
      for (const auto& [p, e] : divisor(out.phis[i]))
        if (e < 0 || i < out.r) out.s.insert(p);
    }
  }
  return out;
}

Json hypotheses_to_json(const HypothesisReport& report) {
  Json out = Json::array();
  for (const HypothesisCheck& c : report.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    if (!c.detail.empty()) entry["detail"] = c.detail;
    out.push_back(std::move(entry));
  }
  return out;
}

Json constants_to_json(const EffectiveConstants& constants) {
  Json out;
  Json s = Json::array();
  for (const Place& p : constants.s) s.push_back(p.to_string());
  out["S"] = std::move(s);
  out["C_aux"] = constants.c_aux;
  out["case3"] = constants.case3 ? Json(rat_to_string(*constants.case3)) : Json("vacuous");
  out["case5_const"] =
      constants.case5_const ? Json(rat_to_string(*constants.case5_const)) : Json(nullptr);
  Json lp = Json::object();
  for (const auto& [j, v] : constants.case5_lprime) lp[std::to_string(j)] = rat_to_string(v);
  out["case5_Lprime"] = std::move(lp);
  out["c0_initial"] = constants.c0_initial;
  return out;
}

namespace {

Json index_pairs(const std::vector<std::pair<unsigned long long, unsigned long long>>& v) {
  Json out = Json::array();
  for (const auto& [n, m] : v) out.push_back(Json::array({n, m}));
  return out;
}

}  // namespace

Json scan_summary_json(const ScanReport& report) {
  Json out;
  out["theorem"] = report.theorem;
  out["n_max"] = report.n_max;
  out["m_max"] = report.m_max;
  out["threshold"] = report.threshold;
  out["empirical_C"] = report.empirical_c ? Json(*report.empirical_c) : Json(nullptr);
  out["zeros"] = index_pairs(report.zeros);
  out["gn_zeros"] = index_pairs(report.gn_zeros);
  out["alerts"] = index_pairs(report.alerts);
  out["hypotheses"] = hypotheses_to_json(report.hypotheses);
  out["constants"] = constants_to_json(report.constants);
  return out;
}

std::string scan_to_csv(const ScanReport& report) {
  std::ostringstream out;
  out << "n,m,mu_diff,mu_Gn,gap\n";
  for (unsigned long long n = 1; n <= report.n_max; ++n) {
    for (unsigned long long m = 1; m <= report.m_max; ++m) {
      const ScanCell& c = report.cell(n, m);
      out << n << ',' << m << ',' << c.mu_diff.to_string() << ',' << c.mu_gn.to_string() << ',';
      if (c.mu_gn.is_infinite())
        out << "undef";
      else if (c.mu_diff.is_infinite())
        out << "inf";
      else
        out << (c.mu_diff - c.mu_gn).value();
      out << '\n';
    }
  }
  return out.str();
}

Json growth_to_json(const GrowthProfile& profile) {
  Json out;
  out["C_minus"] = profile.c_minus ? Json(*profile.c_minus) : Json(nullptr);
  out["C_plus"] = profile.c_plus ? Json(*profile.c_plus) : Json(nullptr);
  Json zeros = Json::array();
  for (auto n : profile.zero_indices) zeros.push_back(n);
  out["zeros"] = std::move(zeros);
  Json gaps = Json::array();
  for (const auto& [n, gap] : profile.gaps) gaps.push_back(Json::array({n, gap}));
  out["gaps"] = std::move(gaps);
  return out;
}

Json inequality_to_json(const InequalityCheck& check) {
  Json out;
  out["lhs"] = check.lhs;
  out["rhs"] = check.rhs;
  out["holds"] = check.holds;
  return out;
}

std::string render_factorization(const RatFunc& f) {
  if (f.is_zero()) return "0";
  Factorization num = factor(f.num());
  Factorization den = factor(f.den());
  Rat unit = num.unit / den.unit;
  std::string out;
  if (unit != 1 || (num.factors.empty() && den.factors.empty())) out = rat_to_string(unit);
  auto append = [&out](const Poly& g, long long e) {
    if (!out.empty()) out += " * ";
    out += "(" + g.to_string() + ")";
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (const auto& [g, mult] : num.factors) append(g, mult);
  for (const auto& [g, mult] : den.factors) append(g, -mult);
  return out;
}

}  // namespace ffrec
