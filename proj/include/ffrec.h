/* ffrec: exact computer algebra for the rational function field Q(x) —
 * valuations, divisors, heights, S-units, multiplicative independence,
 * linear recurrence sequences, and valuation-gap scan reports.
 *
 * All functions return FFREC_OK on success. On failure they return a
 * nonzero status and leave a message in ffrec_last_error() (thread-local).
 * Strings returned through char** are heap-allocated; release them with
 * ffrec_string_free(). Handles are opaque and freed with their matching
 * *_free function.
 */
#ifndef FFREC_H
#define FFREC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ffrec_status {
  FFREC_OK = 0,
  FFREC_ERR_INTERNAL = 1, /* invariant violation or unexpected failure */
  FFREC_ERR_PARSE = 2,    /* malformed expression, JSON, or config */
  FFREC_ERR_DOMAIN = 3    /* valid syntax, invalid mathematics */
} ffrec_status;

typedef struct ffrec_ratfunc ffrec_ratfunc;
typedef struct ffrec_place ffrec_place;
typedef struct ffrec_recurrence ffrec_recurrence;

const char* ffrec_version(void);
const char* ffrec_last_error(void);
void ffrec_string_free(char* s);

/* --- rational functions ------------------------------------------------ */

/* Grammar: expr := term (('+'|'-') term)*, term := factor (('*'|'/')
 * factor)*, factor := base ('^' integer)?, base := rational | 'x' |
 * '(' expr ')'. Whitespace insignificant. */
ffrec_status ffrec_ratfunc_parse(const char* text, ffrec_ratfunc** out);
void ffrec_ratfunc_free(ffrec_ratfunc* f);
ffrec_status ffrec_ratfunc_to_string(const ffrec_ratfunc* f, char** out);

/* "unit * (p1)^e1 * ..." with monic irreducible factors; denominator
 * factors carry negative exponents. */
ffrec_status ffrec_factor(const char* expr, char** out);

/* --- places and valuations --------------------------------------------- */

/* "inf" or a polynomial expression; must be irreducible (the error lists
 * the factors otherwise). */
ffrec_status ffrec_place_parse(const char* text, ffrec_place** out);
void ffrec_place_free(ffrec_place* p);

/* nu_p(f); *is_infinite is set to 1 exactly for f = 0. */
ffrec_status ffrec_valuation(const ffrec_place* p, const ffrec_ratfunc* f, long long* value,
                             int* is_infinite);

/* H(f) = max(deg num, deg den); infinite exactly for f = 0. */
ffrec_status ffrec_height(const ffrec_ratfunc* f, long long* value, int* is_infinite);

/* "place:exp" pairs in canonical place order; error for f = 0. */
ffrec_status ffrec_divisor_to_string(const ffrec_ratfunc* f, char** out);

/* *independent = 1, or 0 with the primitive relation (r, s) such that
 * gamma^r * delta^s is constant. */
ffrec_status ffrec_multiplicative_relation(const ffrec_ratfunc* gamma, const ffrec_ratfunc* delta,
                                           int* independent, long long* r, long long* s);

/* --- linear recurrence sequences ---------------------------------------- */

/* {"terms": [{"coeff": ["<expr>", ...], "root": "<expr>"}, ...]};
 * coeff index k is the coefficient of n^k. */
ffrec_status ffrec_recurrence_parse_json(const char* json_text, ffrec_recurrence** out);
void ffrec_recurrence_free(ffrec_recurrence* rec);

ffrec_status ffrec_recurrence_eval(const ffrec_recurrence* rec, unsigned long long n,
                                   ffrec_ratfunc** out);

/* {"C_minus":..,"C_plus":..,"zeros":[..],"gaps":[[n,gap],..]} over
 * n = 1..n_max; requires a non-degenerate recurrence. */
ffrec_status ffrec_growth_profile(const ffrec_recurrence* rec, const ffrec_place* mu,
                                  unsigned long long n_max, char** json_out);

/* --- theorem instances (JSON configs) ----------------------------------- */

/* config: {"G": rec, "H": rec, "a": expr, "b": expr, "mu": place spec,
 * "genus": int, "grid": {"n_max": int, "m_max": int}} */

/* Hypothesis checklist for theorem 1 or 2 as a JSON array; FFREC_OK even
 * when checks fail (inspect the "pass" flags). */
ffrec_status ffrec_check_hypotheses(const char* config_json, int theorem, char** json_out);

/* Effective constants report: {"S", "C_aux", "case3", "case5_const",
 * "case5_Lprime", "c0_initial"}. */
ffrec_status ffrec_constants(const char* config_json, char** json_out);

/* Runs the exact (n, m) gap scan for the given theorem. Writes the CSV grid
 * (header n,m,mu_diff,mu_Gn,gap) to csv_path and/or the JSON summary to
 * json_path when non-NULL; always returns the summary through
 * summary_json_out. Fails with FFREC_ERR_DOMAIN naming the first violated
 * hypothesis. */
ffrec_status ffrec_scan(const char* config_json, int theorem, const char* csv_path,
                        const char* json_path, char** summary_json_out);

/* --- unit-equation checkers --------------------------------------------- */

/* instance: {"units": [expr...], "S": [place...], "genus": int};
 * result: {"lhs": int, "rhs": int, "holds": bool}. */
ffrec_status ffrec_check_bm(const char* instance_json, char** json_out);

/* instance: {"phis": [expr...], "r": int, "S": [place...], "genus": int}. */
ffrec_status ffrec_check_zannier(const char* instance_json, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* FFREC_H */
