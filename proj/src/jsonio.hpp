#pragma once

#include "verify.hpp"

#include <json.hpp>

#include <string>

namespace ffrec {

using Json = nlohmann::ordered_json;

// {"terms": [{"coeff": ["<expr>", ...], "root": "<expr>"}, ...]}
// coeff index k is the coefficient of n^k.
LinearRecurrence recurrence_from_json(const Json& j);

// "inf" or a polynomial expression; the polynomial is made monic and must
// be irreducible (the error lists its factors otherwise).
Place place_from_spec(const std::string& spec);

struct ScanConfig {
  TheoremInstance instance;
  unsigned long long n_max;
  unsigned long long m_max;
};

// {"G": rec, "H": rec, "a": expr, "b": expr, "mu": spec, "genus": int,
//  "grid": {"n_max": int, "m_max": int}}; a, b default "1", genus 0.
ScanConfig scan_config_from_json(const Json& j);

struct BmInstanceConfig {
  std::vector<RatFunc> units;
  PlaceSet s;
  long long genus = 0;
};

// {"units": [expr...], "S": [place...], "genus": int}; S defaults to the
// joint support of the units.
BmInstanceConfig bm_from_json(const Json& j);

struct ZannierInstanceConfig {
  std::vector<RatFunc> phis;
  std::size_t r = 0;
  PlaceSet s;
  long long genus = 0;
};

// {"phis": [expr...], "r": int, "S": [place...], "genus": int}; S defaults
// to all poles plus the zeros of phi_1..phi_r.
ZannierInstanceConfig zannier_from_json(const Json& j);

Json hypotheses_to_json(const HypothesisReport& report);
Json constants_to_json(const EffectiveConstants& constants);
Json scan_summary_json(const ScanReport& report);
std::string scan_to_csv(const ScanReport& report);
Json growth_to_json(const GrowthProfile& profile);
Json inequality_to_json(const InequalityCheck& check);

std::string render_factorization(const RatFunc& f);

}  // namespace ffrec
