#include "recurrence.hpp"

#include "linalg.hpp"

#include <stdexcept>

namespace ffrec {

CoeffPoly::CoeffPoly(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) throw std::domain_error("recurrence coefficient is identically zero");
}

RatFunc CoeffPoly::eval(unsigned long long n) const {
  RatFunc acc;
  RatFunc nv{Rat(n)};
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * nv + coeffs_[k];
  return acc;
}

LinearRecurrence::LinearRecurrence(std::vector<RecTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::domain_error("recurrence needs at least one term");
  for (const RecTerm& t : terms_)
    if (t.root.is_zero()) throw std::domain_error("characteristic root must be nonzero");
  for (std::size_t i = 0; i < terms_.size(); ++i)
    for (std::size_t j = i + 1; j < terms_.size(); ++j)
      if (terms_[i].root == terms_[j].root)
        throw std::domain_error("characteristic roots must be pairwise distinct");
}

RatFunc evaluate(const LinearRecurrence& g, unsigned long long n) {
  RatFunc acc;
  for (const RecTerm& t : g.terms())
    acc = acc + t.coeff.eval(n) * pow(t.root, static_cast<long long>(n));
  return acc;
}

std::vector<RatFunc> evaluate_range(const LinearRecurrence& g, unsigned long long n_max) {
  std::vector<RatFunc> out;
  out.reserve(n_max + 1);
  std::vector<RatFunc> powers(g.term_count(), RatFunc(Rat(1)));
  for (unsigned long long n = 0; n <= n_max; ++n) {
    RatFunc acc;
    for (std::size_t i = 0; i < g.term_count(); ++i)
      acc = acc + g.terms()[i].coeff.eval(n) * powers[i];
    out.push_back(std::move(acc));
    if (n < n_max)
      for (std::size_t i = 0; i < g.term_count(); ++i)
        powers[i] = powers[i] * g.terms()[i].root;
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> degeneracy_witness(const LinearRecurrence& g) {
  for (std::size_t i = 0; i < g.term_count(); ++i)
    for (std::size_t j = i + 1; j < g.term_count(); ++j) {
      RatFunc ratio = g.terms()[i].root / g.terms()[j].root;
      if (ratio.is_constant()) return std::make_pair(i, j);
    }
  return std::nullopt;
}

bool is_nondegenerate(const LinearRecurrence& g) { return !degeneracy_witness(g).has_value(); }

bool has_constant_root(const LinearRecurrence& g) {
  for (const RecTerm& t : g.terms())
    if (t.root.is_constant()) return true;
  return false;
}

std::size_t PiForm::total_basis_size() const {
  std::size_t total = 0;
  for (const PiGroup& grp : groups) total += grp.summands.size();
  return total;
}

LinearRecurrence PiForm::to_recurrence() const {
  std::vector<RecTerm> terms;
  for (const PiGroup& grp : groups) {
    std::size_t deg = 0;
    for (const PiSummand& s : grp.summands) deg = std::max(deg, s.p.degree());
    std::vector<RatFunc> coeffs(deg + 1);
    for (const PiSummand& s : grp.summands)
      for (std::size_t k = 0; k < s.p.coeffs().size(); ++k)
        coeffs[k] = coeffs[k] + RatFunc(s.p.coeff(k)) * s.pi;
    terms.push_back({CoeffPoly(std::move(coeffs)), grp.root});
  }
  return LinearRecurrence(std::move(terms));
}

PiForm pi_rewrite(const LinearRecurrence& g) {
  PiForm out;
  for (const RecTerm& t : g.terms()) {
    std::vector<RatFunc> funcs;
    for (std::size_t k = 0; k < t.coeff.size(); ++k) funcs.push_back(t.coeff[k]);
    auto rows = ratfunc_coordinates(funcs);

    PiGroup grp{t.root, {}};
    std::vector<std::vector<Rat>> basis_rows;
    std::vector<std::vector<Rat>> p_coeffs;  // per basis element, by power of n
    for (std::size_t k = 0; k < funcs.size(); ++k) {
      if (funcs[k].is_zero()) continue;
      auto rep = solve_in_span(basis_rows, rows[k]);
      if (!rep) {
        basis_rows.push_back(rows[k]);
        grp.summands.push_back({Poly{}, funcs[k]});
        p_coeffs.emplace_back();
        rep = std::vector<Rat>(basis_rows.size(), Rat(0));
        rep->back() = 1;
      }
      for (std::size_t gidx = 0; gidx < rep->size(); ++gidx) {
        if ((*rep)[gidx] == 0) continue;
        auto& pc = p_coeffs[gidx];
        if (pc.size() <= k) pc.resize(k + 1, Rat(0));
        pc[k] = (*rep)[gidx];
      }
    }
    for (std::size_t gidx = 0; gidx < grp.summands.size(); ++gidx)
      grp.summands[gidx].p = Poly(p_coeffs[gidx]);
    out.groups.push_back(std::move(grp));
  }
  return out;
}

long long min_root_valuation(const LinearRecurrence& g, const Place& mu) {
  long long best = 0;
  bool have = false;
  for (const RecTerm& t : g.terms()) {
    long long v = valuation(mu, t.root).value();
    if (!have || v < best) {
      best = v;
      have = true;
    }
  }
  return best;
}

bool dominant_root_ok(const LinearRecurrence& g, const Place& mu) {
  return valuation(mu, g.terms().front().root).value() == min_root_valuation(g, mu);
}

GrowthProfile growth_profile(const LinearRecurrence& g, const Place& mu,
                             unsigned long long n_max) {
  if (auto w = degeneracy_witness(g))
    throw std::domain_error("degenerate recurrence: roots " + std::to_string(w->first + 1) +
                            " and " + std::to_string(w->second + 1) + " have constant ratio");
  GrowthProfile out;
  const long long base = min_root_valuation(g, mu);
  std::vector<RatFunc> values = evaluate_range(g, n_max);
  for (unsigned long long n = 1; n <= n_max; ++n) {
    const RatFunc& v = values[n];
    if (v.is_zero()) {
      out.zero_indices.push_back(n);
      continue;
    }
    long long gap = valuation(mu, v).value() - static_cast<long long>(n) * base;
    out.gaps.emplace_back(n, gap);
    if (!out.c_minus || gap < *out.c_minus) out.c_minus = gap;
    if (!out.c_plus || gap > *out.c_plus) out.c_plus = gap;
  }
  return out;
}

}  // namespace ffrec
