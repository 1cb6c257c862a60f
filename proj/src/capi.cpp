#include "ffrec.h"

#include "jsonio.hpp"
#include "parse.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>

struct ffrec_ratfunc {
  ffrec::RatFunc value;
};

struct ffrec_place {
  ffrec::Place value;
};

struct ffrec_recurrence {
  ffrec::LinearRecurrence value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
ffrec_status guarded(Fn&& fn) {
  try {
    fn();
    return FFREC_OK;
  } catch (const ffrec::ParseError& e) {
    g_last_error = e.what();  // already carries the caret diagnostic
    return FFREC_ERR_PARSE;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("config error: ") + e.what();
    return FFREC_ERR_PARSE;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return FFREC_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return FFREC_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FFREC_ERR_INTERNAL;
  }
}

ffrec::ScanConfig load_scan_config(const char* config_json) {
  return ffrec::scan_config_from_json(ffrec::Json::parse(config_json));
}

ffrec::RatFunc parse_with_diag(const char* text) {
  try {
    return ffrec::parse_ratfunc(text);
  } catch (const ffrec::ParseError& e) {
    throw ffrec::ParseError(ffrec::format_parse_error(e, text), e.position());
  }
}

void write_file(const char* path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::domain_error(std::string("cannot open output file: ") + path);
  out << contents;
}

}  // namespace

extern "C" {

const char* ffrec_version(void) { return "0.1.0"; }

const char* ffrec_last_error(void) { return g_last_error.c_str(); }

void ffrec_string_free(char* s) { std::free(s); }

ffrec_status ffrec_ratfunc_parse(const char* text, ffrec_ratfunc** out) {
  return guarded([&] { *out = new ffrec_ratfunc{parse_with_diag(text)}; });
}

void ffrec_ratfunc_free(ffrec_ratfunc* f) { delete f; }

ffrec_status ffrec_ratfunc_to_string(const ffrec_ratfunc* f, char** out) {
  return guarded([&] { *out = dup_string(f->value.to_string()); });
}

ffrec_status ffrec_factor(const char* expr, char** out) {
  return guarded([&] {
    ffrec::RatFunc f = parse_with_diag(expr);
    if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    *out = dup_string(ffrec::render_factorization(f));
  });
}

ffrec_status ffrec_place_parse(const char* text, ffrec_place** out) {
  return guarded([&] { *out = new ffrec_place{ffrec::place_from_spec(text)}; });
}

void ffrec_place_free(ffrec_place* p) { delete p; }

ffrec_status ffrec_valuation(const ffrec_place* p, const ffrec_ratfunc* f, long long* value,
                             int* is_infinite) {
  return guarded([&] {
    ffrec::ExtInt v = ffrec::valuation(p->value, f->value);
    *is_infinite = v.is_infinite() ? 1 : 0;
    *value = v.is_infinite() ? 0 : v.value();
  });
}

ffrec_status ffrec_height(const ffrec_ratfunc* f, long long* value, int* is_infinite) {
  return guarded([&] {
    ffrec::ExtInt v = ffrec::height(f->value);
    *is_infinite = v.is_infinite() ? 1 : 0;
    *value = v.is_infinite() ? 0 : v.value();
  });
}

ffrec_status ffrec_divisor_to_string(const ffrec_ratfunc* f, char** out) {
  return guarded([&] { *out = dup_string(ffrec::divisor(f->value).to_string()); });
}

ffrec_status ffrec_multiplicative_relation(const ffrec_ratfunc* gamma, const ffrec_ratfunc* delta,
                                           int* independent, long long* r, long long* s) {
  return guarded([&] {
    auto rel = ffrec::multiplicative_relation(gamma->value, delta->value);
    *independent = rel ? 0 : 1;
    *r = rel ? rel->r : 0;
    *s = rel ? rel->s : 0;
  });
}

ffrec_status ffrec_recurrence_parse_json(const char* json_text, ffrec_recurrence** out) {
  return guarded([&] {
    *out = new ffrec_recurrence{ffrec::recurrence_from_json(ffrec::Json::parse(json_text))};
  });
}

void ffrec_recurrence_free(ffrec_recurrence* rec) { delete rec; }

ffrec_status ffrec_recurrence_eval(const ffrec_recurrence* rec, unsigned long long n,
                                   ffrec_ratfunc** out) {
  return guarded([&] { *out = new ffrec_ratfunc{ffrec::evaluate(rec->value, n)}; });
}

ffrec_status ffrec_growth_profile(const ffrec_recurrence* rec, const ffrec_place* mu,
                                  unsigned long long n_max, char** json_out) {
  return guarded([&] {
    ffrec::GrowthProfile profile = ffrec::growth_profile(rec->value, mu->value, n_max);
    *json_out = dup_string(ffrec::growth_to_json(profile).dump(2));
  });
}

ffrec_status ffrec_check_hypotheses(const char* config_json, int theorem, char** json_out) {
  return guarded([&] {
    ffrec::ScanConfig config = load_scan_config(config_json);
    ffrec::HypothesisReport report = ffrec::check_hypotheses(config.instance, theorem);
    *json_out = dup_string(ffrec::hypotheses_to_json(report).dump(2));
  });
}

ffrec_status ffrec_constants(const char* config_json, char** json_out) {
  return guarded([&] {
    ffrec::ScanConfig config = load_scan_config(config_json);
    ffrec::EffectiveConstants constants = ffrec::effective_constants(config.instance);
    *json_out = dup_string(ffrec::constants_to_json(constants).dump(2));
  });
}

ffrec_status ffrec_scan(const char* config_json, int theorem, const char* csv_path,
                        const char* json_path, char** summary_json_out) {
  return guarded([&] {
    ffrec::ScanConfig config = load_scan_config(config_json);
    ffrec::ScanReport report =
        theorem == 2 ? ffrec::scan_theorem2(config.instance, config.n_max, config.m_max)
                     : ffrec::scan_theorem1(config.instance, config.n_max, config.m_max);
    std::string summary = ffrec::scan_summary_json(report).dump(2);
    if (csv_path) write_file(csv_path, ffrec::scan_to_csv(report));
    if (json_path) write_file(json_path, summary + "\n");
    if (summary_json_out) *summary_json_out = dup_string(summary);
  });
}

ffrec_status ffrec_check_bm(const char* instance_json, char** json_out) {
  return guarded([&] {
    ffrec::BmInstanceConfig config = ffrec::bm_from_json(ffrec::Json::parse(instance_json));
    ffrec::InequalityCheck check =
        ffrec::check_brownawell_masser(config.units, config.s, config.genus);
    *json_out = dup_string(ffrec::inequality_to_json(check).dump(2));
  });
}

ffrec_status ffrec_check_zannier(const char* instance_json, char** json_out) {
  return guarded([&] {
    ffrec::ZannierInstanceConfig config =
        ffrec::zannier_from_json(ffrec::Json::parse(instance_json));
    ffrec::InequalityCheck check =
        ffrec::check_zannier(config.phis, config.r, config.s, config.genus);
    *json_out = dup_string(ffrec::inequality_to_json(check).dump(2));
  });
}

}  // extern "C"
