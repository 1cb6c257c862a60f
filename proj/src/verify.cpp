#include "verify.hpp"

#include "linalg.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace ffrec {

const ScanCell& ScanReport::cell(unsigned long long n, unsigned long long m) const {
  if (n < 1 || n > n_max || m < 1 || m > m_max) throw std::out_of_range("cell outside grid");
  return cells[(n - 1) * m_max + (m - 1)];
}

ExtInt ScanReport::gap(unsigned long long n, unsigned long long m) const {
  const ScanCell& c = cell(n, m);
  return c.mu_diff - c.mu_gn;
}

bool ScanReport::in_region(unsigned long long n, unsigned long long m) const {
  unsigned long long pick = theorem == 1 ? std::min(n, m) : std::max(n, m);
  return static_cast<long long>(pick) > threshold;
}

namespace {

unsigned scan_thread_cap() {
  if (const char* env = std::getenv("FFREC_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

ScanReport run_scan(const TheoremInstance& inst, int theorem, unsigned long long n_max,
                    unsigned long long m_max) {
  require_hypotheses(inst, theorem);
  if (n_max < 1 || m_max < 1) throw std::domain_error("grid must be at least 1x1");

  ScanReport report;
  report.theorem = theorem;
  report.n_max = n_max;
  report.m_max = m_max;
  report.hypotheses = check_hypotheses(inst, theorem);
  report.constants = effective_constants(inst);
  report.threshold = report.constants.c0_initial;
  report.cells.resize(n_max * m_max);

  const Place& mu = inst.mu();
  std::vector<RatFunc> gv = evaluate_range(inst.g(), n_max);
  std::vector<RatFunc> hv = evaluate_range(inst.h(), m_max);
  std::vector<RatFunc> agv(n_max + 1), bhv(m_max + 1);
  for (unsigned long long n = 1; n <= n_max; ++n) agv[n] = inst.a() * gv[n];
  for (unsigned long long m = 1; m <= m_max; ++m) bhv[m] = inst.b() * hv[m];
  std::vector<ExtInt> mu_ag(n_max + 1, ExtInt(0)), mu_bh(m_max + 1, ExtInt(0)),
      mu_g(n_max + 1, ExtInt(0));
  for (unsigned long long n = 1; n <= n_max; ++n) {
    mu_ag[n] = valuation(mu, agv[n]);
    mu_g[n] = valuation(mu, gv[n]);
  }
  for (unsigned long long m = 1; m <= m_max; ++m) mu_bh[m] = valuation(mu, bhv[m]);

  auto scan_row = [&](unsigned long long n) {
    for (unsigned long long m = 1; m <= m_max; ++m) {
      RatFunc diff = agv[n] - bhv[m];
      ExtInt mu_diff = valuation(mu, diff);
      // ultrametric audit: these are identities of valuation theory and can
      // only fail on an implementation defect
      ExtInt lower = min(mu_ag[n], mu_bh[m]);
      if (mu_diff < lower) throw std::logic_error("scan audit: mu(aG_n - bH_m) < min bound");
      if (!(mu_ag[n] == mu_bh[m]) && !(mu_diff == lower))
        throw std::logic_error("scan audit: strict triangle equality violated");
      report.cells[(n - 1) * m_max + (m - 1)] = {mu_diff, mu_g[n]};
    }
  };

  const unsigned threads = std::min<unsigned long long>(scan_thread_cap(), n_max);
  if (threads <= 1) {
    for (unsigned long long n = 1; n <= n_max; ++n) scan_row(n);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (unsigned long long n = 1 + t; n <= n_max; n += threads) scan_row(n);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  // deterministic aggregation pass
  for (unsigned long long n = 1; n <= n_max; ++n) {
    for (unsigned long long m = 1; m <= m_max; ++m) {
      const ScanCell& c = report.cell(n, m);
      if (c.mu_gn.is_infinite()) {
        report.gn_zeros.emplace_back(n, m);
        continue;
      }
      if (c.mu_diff.is_infinite()) {
        report.zeros.emplace_back(n, m);
        if (report.in_region(n, m)) report.alerts.emplace_back(n, m);
        continue;
      }
      if (report.in_region(n, m)) {
        long long gap = (c.mu_diff - c.mu_gn).value();
        if (!report.empirical_c || gap > *report.empirical_c) report.empirical_c = gap;
      }
    }
  }
  return report;
}

}  // namespace

ScanReport scan_theorem1(const TheoremInstance& inst, unsigned long long n_max,
                         unsigned long long m_max) {
  return run_scan(inst, 1, n_max, m_max);
}

ScanReport scan_theorem2(const TheoremInstance& inst, unsigned long long n_max,
                         unsigned long long m_max) {
  return run_scan(inst, 2, n_max, m_max);
}

namespace {

void require_polynomial(const RatFunc& f, const char* what) {
  if (!(f.den() == Poly(Rat(1))))
    throw std::domain_error(std::string("Corollary 1 requires polynomial data: ") + what +
                            " = " + f.to_string());
}

}  // namespace

CorollaryReport check_corollary_degrees(const TheoremInstance& inst, unsigned long long n_max,
                                        unsigned long long m_max) {
  if (!inst.mu().is_infinite())
    throw std::domain_error("Corollary 1 requires mu to be the infinite place");
  require_polynomial(inst.a(), "a");
  require_polynomial(inst.b(), "b");
  for (const RecTerm& t : inst.g().terms()) {
    require_polynomial(t.root, "root of G");
    for (std::size_t k = 0; k < t.coeff.size(); ++k) require_polynomial(t.coeff[k], "coefficient of G");
  }
  for (const RecTerm& t : inst.h().terms()) {
    require_polynomial(t.root, "root of H");
    for (std::size_t k = 0; k < t.coeff.size(); ++k) require_polynomial(t.coeff[k], "coefficient of H");
  }

  ScanReport scan = scan_theorem1(inst, n_max, m_max);
  CorollaryReport out;
  out.empirical_c = scan.empirical_c;
  out.holds = true;
  if (!out.empirical_c) return out;

  // degrees recomputed from the polynomials themselves, not via valuations
  std::vector<RatFunc> gv = evaluate_range(inst.g(), n_max);
  std::vector<RatFunc> hv = evaluate_range(inst.h(), m_max);
  for (unsigned long long n = 1; n <= n_max; ++n) {
    RatFunc agn = inst.a() * gv[n];
    if (agn.is_zero()) continue;
    long long deg_gn = static_cast<long long>(gv[n].num().degree());
    for (unsigned long long m = 1; m <= m_max; ++m) {
      if (!scan.in_region(n, m)) continue;
      RatFunc diff = agn - inst.b() * hv[m];
      if (diff.is_zero()) {
        out.holds = false;
        out.violations.emplace_back(n, m, -1, deg_gn);
        continue;
      }
      long long deg_diff = static_cast<long long>(diff.num().degree());
      if (deg_diff < deg_gn - *out.empirical_c) {
        out.holds = false;
        out.violations.emplace_back(n, m, deg_diff, deg_gn);
      }
    }
  }
  return out;
}

InequalityCheck check_brownawell_masser(std::span<const RatFunc> units, const PlaceSet& s,
                                        long long genus) {
  if (units.empty()) throw std::domain_error("at least one unit required");
  std::vector<RatFunc> terms;
  terms.emplace_back(Rat(1));
  RatFunc total{Rat(1)};
  for (const RatFunc& u : units) {
    terms.push_back(u);
    total = total + u;
  }
  if (!total.is_zero()) throw std::domain_error("identity fails: 1 + sum u_i = " + total.to_string());
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (units[i].is_zero() || !is_s_unit(units[i], s))
      throw std::domain_error("u_" + std::to_string(i + 1) + " is not an S-unit");
  }
  if (auto sub = minimal_vanishing_subsum(terms); sub && sub->indices.size() < terms.size()) {
    std::string idx;
    for (std::size_t i : sub->indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    throw std::domain_error("vanishing proper subsum at positions " + idx);
  }

  InequalityCheck out;
  for (const RatFunc& u : units) out.lhs = std::max(out.lhs, height_finite(u));
  long long k = static_cast<long long>(units.size());
  out.rhs = binomial(Int(k), 2).convert_to<long long>() *
            (weighted_size(s) + std::max<long long>(0, 2 * genus - 2));
  out.holds = out.lhs <= out.rhs;
  return out;
}

InequalityCheck check_zannier(std::span<const RatFunc> phis, std::size_t r, const PlaceSet& s,
                              long long genus) {
  const std::size_t n = phis.size();
  if (n == 0) throw std::domain_error("at least one function required");
  if (r > n) throw std::domain_error("r exceeds the number of functions");
  for (std::size_t i = 0; i < n; ++i)
    if (phis[i].is_zero()) throw std::domain_error("phi_" + std::to_string(i + 1) + " is zero");
  if (dependence_certificate(phis))
    throw std::domain_error("not linearly independent over the constants");

  std::vector<Divisor> divs;
  for (const RatFunc& f : phis) divs.push_back(divisor(f));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [p, e] : divs[i]) {
      if (e < 0 && !s.contains(p))
        throw std::domain_error("pole of phi_" + std::to_string(i + 1) + " not in S: " +
                                p.to_string());
      if (e > 0 && i < r && !s.contains(p))
        throw std::domain_error("zero of phi_" + std::to_string(i + 1) + " not in S: " +
                                p.to_string());
    }
  }

  // independence makes sigma nonzero (all-ones would be a dependence)
  RatFunc sigma;
  for (const RatFunc& f : phis) sigma = sigma + f;

  InequalityCheck out;
  for (const Place& p : s) {
    long long vs = valuation(p, sigma).value();
    long long vmin = valuation(p, phis[0]).value();
    for (std::size_t i = 1; i < n; ++i) vmin = std::min(vmin, valuation(p, phis[i]).value());
    out.lhs += p.degree() * (vs - vmin);
  }
  out.rhs = binomial(Int(static_cast<long long>(n)), 2).convert_to<long long>() *
            (weighted_size(s) + 2 * genus - 2);
  for (std::size_t i = r; i < n; ++i) out.rhs += height_finite(phis[i]);
  out.holds = out.lhs <= out.rhs;
  return out;
}

std::vector<RatFunc> summand_values(const TheoremInstance& inst, unsigned long long n,
                                    unsigned long long m) {
  std::vector<RatFunc> out;
  for (const PiGroup& grp : inst.pi_g().groups) {
    RatFunc root_pow = pow(grp.root, static_cast<long long>(n));
    for (const PiSummand& sm : grp.summands)
      out.push_back(RatFunc(sm.p.eval(Rat(n))) * sm.pi * root_pow);
  }
  for (const PiGroup& grp : inst.pi_h().groups) {
    RatFunc root_pow = pow(grp.root, static_cast<long long>(m));
    for (const PiSummand& sm : grp.summands)
      out.push_back(-(RatFunc(sm.p.eval(Rat(m))) * sm.pi * root_pow));
  }
  return out;
}

std::optional<std::vector<Rat>> dependence_certificate(std::span<const RatFunc> values) {
  if (values.empty()) throw std::domain_error("empty list");
  for (const RatFunc& v : values)
    if (v.is_zero()) throw std::domain_error("zero entry");
  auto rows = ratfunc_coordinates(values);
  std::vector<std::vector<Rat>> basis_rows;
  std::vector<std::size_t> basis_idx;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    auto rep = solve_in_span(basis_rows, rows[k]);
    if (!rep) {
      basis_rows.push_back(rows[k]);
      basis_idx.push_back(k);
      continue;
    }
    std::vector<Rat> cert(values.size(), Rat(0));
    for (std::size_t g = 0; g < rep->size(); ++g) cert[basis_idx[g]] = (*rep)[g];
    cert[k] = Rat(-1);
    return cert;
  }
  return std::nullopt;
}

std::optional<SubsumWitness> minimal_vanishing_subsum(std::span<const RatFunc> values) {
  const std::size_t k = values.size();
  if (k > 20) throw std::domain_error("enumeration budget exceeded (max 20 summands)");
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      RatFunc sum;
      for (std::size_t i : idx) sum = sum + values[i];
      if (sum.is_zero()) return SubsumWitness{idx};
      // next combination
      std::size_t j = size;
      bool done = true;
      while (j-- > 0) {
        if (idx[j] != k - size + j) {
          ++idx[j];
          for (std::size_t l = j + 1; l < size; ++l) idx[l] = idx[l - 1] + 1;
          done = false;
          break;
        }
      }
      if (done) break;
    }
  }
  return std::nullopt;
}

}  // namespace ffrec
