#pragma once

#include "multindep.hpp"
#include "recurrence.hpp"

#include <map>
#include <string>

namespace ffrec {

struct HypothesisCheck {
  std::string name;
  bool pass;
  std::string detail;  // witness or note; empty when uninteresting
};

struct HypothesisReport {
  std::vector<HypothesisCheck> checks;

  bool all_pass() const;
  const HypothesisCheck* first_failure() const;
};

// A configured pair of recurrences with the data of Theorems 1-2: the
// valuation mu, the scalars a, b, and the genus parameter (0 for Q(x); kept
// configurable so the formulas carry the max(0, 2g-2) term).
class TheoremInstance {
 public:
  TheoremInstance(LinearRecurrence g, LinearRecurrence h, RatFunc a, RatFunc b, Place mu,
                  long long genus = 0);

  const LinearRecurrence& g() const { return g_; }
  const LinearRecurrence& h() const { return h_; }
  const PiForm& pi_g() const { return pi_g_; }
  const PiForm& pi_h() const { return pi_h_; }
  const RatFunc& a() const { return a_; }
  const RatFunc& b() const { return b_; }
  const Place& mu() const { return mu_; }
  long long genus() const { return genus_; }

 private:
  LinearRecurrence g_;
  LinearRecurrence h_;
  PiForm pi_g_;
  PiForm pi_h_;
  RatFunc a_;
  RatFunc b_;
  Place mu_;
  long long genus_;
};

// The hypothesis checklist of Theorem 1 (theorem = 1) or Theorem 2
// (theorem = 2). Independence of (alpha_1, beta_j) is only demanded for
// nonconstant beta_j; a constant beta_j is handled by the Case-5
// constant-root bound under Theorem 1 and is a failure under Theorem 2.
HypothesisReport check_hypotheses(const TheoremInstance& inst, int theorem);

// Throws std::domain_error naming the first failed hypothesis.
void require_hypotheses(const TheoremInstance& inst, int theorem);

// Smallest S with mu in S making every root and every pi/psi basis element
// an S-unit.
PlaceSet build_s(const TheoremInstance& inst);

// C_aux = binom(sum k_i + sum l_j, 2) * (|S| + max(0, 2g - 2)), with |S|
// weighted by place degrees.
long long compute_c_aux(const TheoremInstance& inst);

// Case-3 index bound (C_aux + max H(pi_ig / pi_jg')) / min H(alpha_i /
// alpha_j) over distinct root groups; nullopt when the recurrence has a
// single root (the case is vacuous). Applying it to the H-side pi-form
// gives the mirrored Case-4 bound.
std::optional<Rat> case3_bound(const PiForm& pi, long long c_aux);

struct Case5Bounds {
  std::optional<Rat> const_root_bound;      // subcase beta_j constant
  std::map<std::size_t, Rat> lprime_per_j;  // 1-based j -> L' (nonconstant beta_j)
};

Case5Bounds case5_bounds(const TheoremInstance& inst, long long c_aux);

// Largest nonnegative integer root among all P_ig and Q_jh: below this
// index some rewritten coefficient vanishes, so scans certify only
// min/max(n, m) beyond it.
long long initial_c0(const TheoremInstance& inst);

struct EffectiveConstants {
  PlaceSet s;
  long long c_aux = 0;
  std::optional<Rat> case3;
  std::optional<Rat> case5_const;
  std::map<std::size_t, Rat> case5_lprime;
  long long c0_initial = 0;
};

// All formula-driven constants of the proof for this instance; requires the
// Theorem 1 hypotheses.
EffectiveConstants effective_constants(const TheoremInstance& inst);

}  // namespace ffrec
