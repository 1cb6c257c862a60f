#include "effective.hpp"

#include <stdexcept>

namespace ffrec {

bool HypothesisReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const HypothesisCheck* HypothesisReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

TheoremInstance::TheoremInstance(LinearRecurrence g, LinearRecurrence h, RatFunc a, RatFunc b,
                                 Place mu, long long genus)
    : g_(std::move(g)),
      h_(std::move(h)),
      pi_g_(pi_rewrite(g_)),
      pi_h_(pi_rewrite(h_)),
      a_(std::move(a)),
      b_(std::move(b)),
      mu_(std::move(mu)),
      genus_(genus) {
  if (a_.is_zero()) throw std::domain_error("a must be nonzero");
  if (b_.is_zero()) throw std::domain_error("b must be nonzero");
  if (genus_ < 0) throw std::domain_error("genus must be nonnegative");
}

HypothesisReport check_hypotheses(const TheoremInstance& inst, int theorem) {
  if (theorem != 1 && theorem != 2) throw std::invalid_argument("theorem must be 1 or 2");
  HypothesisReport report;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  if (auto w = degeneracy_witness(inst.g()))
    add("G non-degenerate", false,
        "roots " + std::to_string(w->first + 1) + " and " + std::to_string(w->second + 1) +
            " have constant ratio");
  else
    add("G non-degenerate", true);

  if (auto w = degeneracy_witness(inst.h()))
    add("H non-degenerate", false,
        "roots " + std::to_string(w->first + 1) + " and " + std::to_string(w->second + 1) +
            " have constant ratio");
  else
    add("H non-degenerate", true);

  const RatFunc& alpha1 = inst.g().terms().front().root;
  add("alpha_1 not constant", !alpha1.is_constant(),
      alpha1.is_constant() ? "alpha_1 = " + alpha1.to_string() : "");

  {
    bool pass = true;
    std::string detail;
    for (std::size_t j = 0; j < inst.h().term_count(); ++j) {
      const RatFunc& beta = inst.h().terms()[j].root;
      if (beta.is_constant()) {
        if (!detail.empty()) detail += "; ";
        detail += "beta_" + std::to_string(j + 1) + " constant (Case-5 constant-root bound applies)";
        continue;
      }
      if (auto rel = multiplicative_relation(alpha1, beta)) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += "(alpha_1, beta_" + std::to_string(j + 1) + ") multiplicatively dependent: " +
                  "relation r=" + std::to_string(rel->r) + " s=" + std::to_string(rel->s);
      }
    }
    add("(alpha_1, beta_j) multiplicatively independent", pass, detail);
  }

  {
    bool pass = dominant_root_ok(inst.g(), inst.mu());
    add("mu(alpha_1) <= mu(alpha_i) for all i", pass,
        pass ? ""
             : "mu(alpha_1) = " + valuation(inst.mu(), alpha1).to_string() + " > min = " +
                   std::to_string(min_root_valuation(inst.g(), inst.mu())));
  }

  if (theorem == 2) {
    bool g_ok = !has_constant_root(inst.g());
    add("no constant characteristic root in G", g_ok);
    bool h_ok = !has_constant_root(inst.h());
    add("no constant characteristic root in H", h_ok);
  }
  return report;
}

void require_hypotheses(const TheoremInstance& inst, int theorem) {
  HypothesisReport report = check_hypotheses(inst, theorem);
  if (const HypothesisCheck* fail = report.first_failure()) {
    std::string msg = "hypothesis failed: " + fail->name;
    if (!fail->detail.empty()) msg += " (" + fail->detail + ")";
    throw std::domain_error(msg);
  }
}

PlaceSet build_s(const TheoremInstance& inst) {
  std::vector<RatFunc> fs;
  for (const RecTerm& t : inst.g().terms()) fs.push_back(t.root);
  for (const RecTerm& t : inst.h().terms()) fs.push_back(t.root);
  for (const PiGroup& grp : inst.pi_g().groups)
    for (const PiSummand& s : grp.summands) fs.push_back(s.pi);
  for (const PiGroup& grp : inst.pi_h().groups)
    for (const PiSummand& s : grp.summands) fs.push_back(s.pi);
  return minimal_s(fs, PlaceSet{inst.mu()});
}

long long compute_c_aux(const TheoremInstance& inst) {
  long long k = static_cast<long long>(inst.pi_g().total_basis_size() +
                                       inst.pi_h().total_basis_size());
  long long s = weighted_size(build_s(inst));
  long long genus_term = std::max<long long>(0, 2 * inst.genus() - 2);
  return binomial(Int(k), 2).convert_to<long long>() * (s + genus_term);
}

std::optional<Rat> case3_bound(const PiForm& pi, long long c_aux) {
  if (pi.groups.size() < 2) return std::nullopt;
  long long max_ratio = 0;
  long long min_root_gap = -1;
  for (std::size_t i = 0; i < pi.groups.size(); ++i) {
    for (std::size_t j = 0; j < pi.groups.size(); ++j) {
      if (i == j) continue;
      long long gap = height_finite(pi.groups[i].root / pi.groups[j].root);
      if (min_root_gap < 0 || gap < min_root_gap) min_root_gap = gap;
      for (const PiSummand& si : pi.groups[i].summands)
        for (const PiSummand& sj : pi.groups[j].summands)
          max_ratio = std::max(max_ratio, height_finite(si.pi / sj.pi));
    }
  }
  if (min_root_gap == 0)
    throw std::domain_error("degenerate recurrence: two roots with constant ratio");
  return Rat(c_aux + max_ratio, min_root_gap);
}

Case5Bounds case5_bounds(const TheoremInstance& inst, long long c_aux) {
  Case5Bounds out;
  const RatFunc& alpha1 = inst.g().terms().front().root;
  long long h_alpha1 = height_finite(alpha1);
  const PiGroup& first = inst.pi_g().groups.front();
  for (std::size_t j = 0; j < inst.pi_h().groups.size(); ++j) {
    const PiGroup& hg = inst.pi_h().groups[j];
    long long max_ratio = 0;
    for (const PiSummand& sg : first.summands)
      for (const PiSummand& sh : hg.summands)
        max_ratio = std::max(max_ratio, height_finite(sg.pi / sh.pi));
    if (hg.root.is_constant()) {
      if (h_alpha1 == 0) throw std::domain_error("hypothesis failed: alpha_1 not constant");
      Rat bound = Rat(c_aux + max_ratio, h_alpha1);
      if (!out.const_root_bound || bound > *out.const_root_bound) out.const_root_bound = bound;
    } else {
      out.lprime_per_j.emplace(j + 1,
                               effective_lprime(alpha1, hg.root, Rat(c_aux + max_ratio)));
    }
  }
  return out;
}

namespace {

// Largest nonnegative integer root of a nonzero rational-coefficient
// polynomial, or -1 when there is none.
long long largest_nonneg_integer_root(const Poly& p) {
  if (p.is_constant()) return -1;
  long long best = -1;
  Poly stripped = p;
  while (stripped.coeff(0) == 0) {
    best = 0;  // n = 0 is a root
    std::vector<Rat> shifted(stripped.coeffs().begin() + 1, stripped.coeffs().end());
    stripped = Poly(std::move(shifted));
    if (stripped.is_constant()) return best;
  }
  // integer roots divide the constant term of the primitive integer form
  Int den_lcm = 1;
  for (const Rat& c : stripped.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, denom(c));
  Int c0 = numer(stripped.coeff(0)) * (den_lcm / denom(stripped.coeff(0)));
  Int g = 0;
  for (const Rat& c : stripped.coeffs())
    g = boost::multiprecision::gcd(g, numer(c) * (den_lcm / denom(c)));
  c0 /= g;
  if (c0 < 0) c0 = -c0;
  if (c0 > Int(1000000000000LL)) throw std::domain_error("integer root search budget exceeded");
  for (Int d = 1; d * d <= c0; ++d) {
    if (c0 % d != 0) continue;
    Int q = c0 / d;
    for (const Int& cand : {d, q}) {
      if (stripped.eval(Rat(cand)) == 0) best = std::max(best, cand.convert_to<long long>());
    }
  }
  return best;
}

}  // namespace

long long initial_c0(const TheoremInstance& inst) {
  long long best = 0;
  for (const PiForm* pi : {&inst.pi_g(), &inst.pi_h()})
    for (const PiGroup& grp : pi->groups)
      for (const PiSummand& s : grp.summands)
        best = std::max(best, largest_nonneg_integer_root(s.p));
  return best;
}

EffectiveConstants effective_constants(const TheoremInstance& inst) {
  require_hypotheses(inst, 1);
  EffectiveConstants out;
  out.s = build_s(inst);
  out.c_aux = compute_c_aux(inst);
  out.case3 = case3_bound(inst.pi_g(), out.c_aux);
  Case5Bounds c5 = case5_bounds(inst, out.c_aux);
  out.case5_const = c5.const_root_bound;
  out.case5_lprime = std::move(c5.lprime_per_j);
  out.c0_initial = initial_c0(inst);
  return out;
}

}  // namespace ffrec
