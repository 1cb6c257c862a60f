// ffrec command-line front-end. Talks to the library exclusively through
// the C API in ffrec.h; exit codes: 0 ok, 2 parse/config error, 3 domain
// error, 1 internal.

#include "ffrec.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

int fail(ffrec_status status) {
  std::cerr << "error: " << ffrec_last_error() << "\n";
  return static_cast<int>(status);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  ffrec_string_free(s);
  return out;
}

struct RatFuncHandle {
  ffrec_ratfunc* ptr = nullptr;
  ~RatFuncHandle() { ffrec_ratfunc_free(ptr); }
};

struct PlaceHandle {
  ffrec_place* ptr = nullptr;
  ~PlaceHandle() { ffrec_place_free(ptr); }
};

struct RecurrenceHandle {
  ffrec_recurrence* ptr = nullptr;
  ~RecurrenceHandle() { ffrec_recurrence_free(ptr); }
};

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int require_file(const std::string& path, std::string& out) {
  if (read_file(path, out)) return 0;
  std::cerr << "error: cannot read " << path << "\n";
  return 2;
}

void print_checklist(const std::string& checklist_json) {
  Json checks = Json::parse(checklist_json);
  for (const Json& c : checks) {
    std::cout << (c.at("pass").get<bool>() ? "[ok]   " : "[FAIL] ") << c.at("name").get<std::string>();
    if (c.contains("detail")) std::cout << " -- " << c.at("detail").get<std::string>();
    std::cout << "\n";
  }
}

int cmd_factor(const std::string& expr) {
  char* out = nullptr;
  if (ffrec_status st = ffrec_factor(expr.c_str(), &out); st != FFREC_OK) return fail(st);
  std::cout << take_string(out) << "\n";
  return 0;
}

int cmd_val(const std::string& place_spec, const std::string& expr) {
  PlaceHandle place;
  if (ffrec_status st = ffrec_place_parse(place_spec.c_str(), &place.ptr); st != FFREC_OK)
    return fail(st);
  RatFuncHandle f;
  if (ffrec_status st = ffrec_ratfunc_parse(expr.c_str(), &f.ptr); st != FFREC_OK) return fail(st);
  long long value = 0;
  int infinite = 0;
  if (ffrec_status st = ffrec_valuation(place.ptr, f.ptr, &value, &infinite); st != FFREC_OK)
    return fail(st);
  if (infinite)
    std::cout << "inf\n";
  else
    std::cout << value << "\n";
  return 0;
}

int cmd_height(const std::string& expr) {
  RatFuncHandle f;
  if (ffrec_status st = ffrec_ratfunc_parse(expr.c_str(), &f.ptr); st != FFREC_OK) return fail(st);
  long long value = 0;
  int infinite = 0;
  if (ffrec_status st = ffrec_height(f.ptr, &value, &infinite); st != FFREC_OK) return fail(st);
  if (infinite)
    std::cout << "inf\n";
  else
    std::cout << value << "\n";
  return 0;
}

int cmd_divisor(const std::string& expr) {
  RatFuncHandle f;
  if (ffrec_status st = ffrec_ratfunc_parse(expr.c_str(), &f.ptr); st != FFREC_OK) return fail(st);
  char* out = nullptr;
  if (ffrec_status st = ffrec_divisor_to_string(f.ptr, &out); st != FFREC_OK) return fail(st);
  std::cout << take_string(out) << "\n";
  return 0;
}

int cmd_indep(const std::string& e1, const std::string& e2) {
  RatFuncHandle f, g;
  if (ffrec_status st = ffrec_ratfunc_parse(e1.c_str(), &f.ptr); st != FFREC_OK) return fail(st);
  if (ffrec_status st = ffrec_ratfunc_parse(e2.c_str(), &g.ptr); st != FFREC_OK) return fail(st);
  int independent = 0;
  long long r = 0, s = 0;
  if (ffrec_status st = ffrec_multiplicative_relation(f.ptr, g.ptr, &independent, &r, &s);
      st != FFREC_OK)
    return fail(st);
  if (independent)
    std::cout << "independent\n";
  else
    std::cout << "dependent r=" << r << " s=" << s << "\n";
  return 0;
}

int cmd_eval(const std::string& rec_file, unsigned long long n) {
  std::string text;
  if (int rc = require_file(rec_file, text); rc != 0) return rc;
  RecurrenceHandle rec;
  if (ffrec_status st = ffrec_recurrence_parse_json(text.c_str(), &rec.ptr); st != FFREC_OK)
    return fail(st);
  RatFuncHandle value;
  if (ffrec_status st = ffrec_recurrence_eval(rec.ptr, n, &value.ptr); st != FFREC_OK)
    return fail(st);
  char* out = nullptr;
  if (ffrec_status st = ffrec_ratfunc_to_string(value.ptr, &out); st != FFREC_OK) return fail(st);
  std::cout << take_string(out) << "\n";
  return 0;
}

int cmd_growth(const std::string& rec_file, const std::string& place_spec, unsigned long long n_max,
               const std::string& csv_path) {
  std::string text;
  if (int rc = require_file(rec_file, text); rc != 0) return rc;
  RecurrenceHandle rec;
  if (ffrec_status st = ffrec_recurrence_parse_json(text.c_str(), &rec.ptr); st != FFREC_OK)
    return fail(st);
  PlaceHandle place;
  if (ffrec_status st = ffrec_place_parse(place_spec.c_str(), &place.ptr); st != FFREC_OK)
    return fail(st);
  char* out = nullptr;
  if (ffrec_status st = ffrec_growth_profile(rec.ptr, place.ptr, n_max, &out); st != FFREC_OK)
    return fail(st);
  Json profile = Json::parse(take_string(out));
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) {
      std::cerr << "error: cannot open " << csv_path << "\n";
      return 2;
    }
    csv << "n,gap\n";
    for (const Json& pair : profile.at("gaps"))
      csv << pair[0].get<unsigned long long>() << "," << pair[1].get<long long>() << "\n";
  }
  Json summary;
  summary["C_minus"] = profile.at("C_minus");
  summary["C_plus"] = profile.at("C_plus");
  summary["zeros"] = profile.at("zeros");
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_constants(const std::string& config_file) {
  std::string text;
  if (int rc = require_file(config_file, text); rc != 0) return rc;
  char* out = nullptr;
  if (ffrec_status st = ffrec_constants(text.c_str(), &out); st != FFREC_OK) return fail(st);
  std::cout << take_string(out) << "\n";
  return 0;
}

int cmd_scan(const std::string& config_file, int theorem, const std::string& format,
             std::string out_file) {
  std::string text;
  if (int rc = require_file(config_file, text); rc != 0) return rc;

  char* checklist = nullptr;
  if (ffrec_status st = ffrec_check_hypotheses(text.c_str(), theorem, &checklist); st != FFREC_OK)
    return fail(st);
  print_checklist(take_string(checklist));

  if (out_file.empty()) out_file = format == "json" ? "scan_report.json" : "scan_report.csv";
  const char* csv_path = format == "csv" ? out_file.c_str() : nullptr;
  const char* json_path = format == "json" ? out_file.c_str() : nullptr;
  char* summary_raw = nullptr;
  if (ffrec_status st = ffrec_scan(text.c_str(), theorem, csv_path, json_path, &summary_raw);
      st != FFREC_OK)
    return fail(st);
  Json summary = Json::parse(take_string(summary_raw));
  std::cout << "report written to " << out_file << "\n";
  std::cout << "threshold (c0_initial) = " << summary.at("threshold") << "\n";
  std::cout << "empirical_C = " << summary.at("empirical_C").dump() << "\n";
  std::cout << "zeros = " << summary.at("zeros").size()
            << ", alerts = " << summary.at("alerts").size() << "\n";
  std::cout << "constants: " << summary.at("constants").dump() << "\n";
  return 0;
}

int cmd_check(bool bm, bool zannier, const std::string& instance_file) {
  if (bm == zannier) {
    std::cerr << "error: choose exactly one of --bm / --zannier\n";
    return 2;
  }
  std::string text;
  if (int rc = require_file(instance_file, text); rc != 0) return rc;
  char* out = nullptr;
  ffrec_status st = bm ? ffrec_check_bm(text.c_str(), &out)
                       : ffrec_check_zannier(text.c_str(), &out);
  if (st != FFREC_OK) return fail(st);
  Json result = Json::parse(take_string(out));
  std::cout << "lhs=" << result.at("lhs").get<long long>()
            << " rhs=" << result.at("rhs").get<long long>()
            << " holds=" << (result.at("holds").get<bool>() ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for Q(x): valuations, heights, S-units, "
               "linear recurrences, and valuation-gap scans"};
  app.require_subcommand(1);

  std::string expr, expr2, place_spec = "inf", file, format = "csv", out_file, csv_path;
  unsigned long long n = 0, n_max = 100;
  int theorem = 1;
  bool bm = false, zannier = false;

  auto* factor = app.add_subcommand("factor", "factor a rational function over Q");
  factor->add_option("expr", expr, "expression")->required();

  auto* val = app.add_subcommand("val", "valuation of an expression at a place");
  val->add_option("--place", place_spec, "place: 'inf' or an irreducible polynomial");
  val->add_option("expr", expr, "expression")->required();

  auto* height = app.add_subcommand("height", "height of a rational function");
  height->add_option("expr", expr, "expression")->required();

  auto* div = app.add_subcommand("divisor", "divisor of a nonzero rational function");
  div->add_option("expr", expr, "expression")->required();

  auto* indep = app.add_subcommand("indep", "multiplicative independence of two functions");
  indep->add_option("expr1", expr, "first expression")->required();
  indep->add_option("expr2", expr2, "second expression")->required();

  auto* eval = app.add_subcommand("eval", "evaluate a recurrence at an index");
  eval->add_option("recurrence", file, "recurrence JSON file")->required();
  eval->add_option("n", n, "index")->required();

  auto* growth = app.add_subcommand("growth", "empirical growth profile of mu(G_n)");
  growth->add_option("recurrence", file, "recurrence JSON file")->required();
  growth->add_option("--place", place_spec, "place: 'inf' or an irreducible polynomial");
  growth->add_option("--n-max", n_max, "largest index");
  growth->add_option("--csv", csv_path, "write n,gap rows to this file");

  auto* constants = app.add_subcommand("constants", "effective constants for a scan config");
  constants->add_option("config", file, "scan config JSON file")->required();

  auto* scan = app.add_subcommand("scan", "exact valuation-gap scan over an (n, m) grid");
  scan->add_option("config", file, "scan config JSON file")->required();
  scan->add_option("--theorem", theorem, "1 or 2")->check(CLI::IsMember({1, 2}));
  scan->add_option("--out", format, "report format")->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--out-file", out_file, "report path (default scan_report.<ext>)");

  auto* check = app.add_subcommand("check", "unit-equation inequality checkers");
  check->add_flag("--bm", bm, "Brownawell-Masser height bound");
  check->add_flag("--zannier", zannier, "subspace-theorem analogue");
  check->add_option("instance", file, "instance JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  if (factor->parsed()) return cmd_factor(expr);
  if (val->parsed()) return cmd_val(place_spec, expr);
  if (height->parsed()) return cmd_height(expr);
  if (div->parsed()) return cmd_divisor(expr);
  if (indep->parsed()) return cmd_indep(expr, expr2);
  if (eval->parsed()) return cmd_eval(file, n);
  if (growth->parsed()) return cmd_growth(file, place_spec, n_max, csv_path);
  if (constants->parsed()) return cmd_constants(file);
  if (scan->parsed()) return cmd_scan(file, theorem, format, out_file);
  if (check->parsed()) return cmd_check(bm, zannier, file);
  return 1;
}
