#pragma once

#include "effective.hpp"

#include <optional>
#include <span>
#include <tuple>
#include <vector>

namespace ffrec {

struct ScanCell {
  ExtInt mu_diff{0};  // mu(a G_n - b H_m); infinite exactly when the difference is 0
  ExtInt mu_gn{0};    // mu(G_n); infinite exactly when G_n = 0
};

// Exact valuation-gap grid for one instance. gap(n, m) = mu_diff - mu_gn.
// The certified region is min(n, m) > threshold for Theorem 1 and
// max(n, m) > threshold for Theorem 2; empirical_c is the maximal finite
// gap over that region. Zeros of the difference are segregated; a zero
// inside the certified region is listed in alerts.
struct ScanReport {
  int theorem = 1;
  unsigned long long n_max = 0;
  unsigned long long m_max = 0;
  long long threshold = 0;

  std::vector<ScanCell> cells;  // row-major, n outer, both 1-based
  std::vector<std::pair<unsigned long long, unsigned long long>> zeros;
  std::vector<std::pair<unsigned long long, unsigned long long>> gn_zeros;
  std::vector<std::pair<unsigned long long, unsigned long long>> alerts;
  std::optional<long long> empirical_c;

  HypothesisReport hypotheses;
  EffectiveConstants constants;

  const ScanCell& cell(unsigned long long n, unsigned long long m) const;
  ExtInt gap(unsigned long long n, unsigned long long m) const;  // throws when G_n = 0
  bool in_region(unsigned long long n, unsigned long long m) const;
};

// Verifies the Theorem 1 hypotheses (throws std::domain_error naming the
// failed one), then scans the 1-based grid exactly. Each cell is audited
// against the ultrametric laws; a violation is an internal defect and
// throws std::logic_error.
ScanReport scan_theorem1(const TheoremInstance& inst, unsigned long long n_max,
                         unsigned long long m_max);

// Same with the Theorem 2 hypotheses and the max(n, m) region.
ScanReport scan_theorem2(const TheoremInstance& inst, unsigned long long n_max,
                         unsigned long long m_max);

struct CorollaryReport {
  bool holds = false;
  std::optional<long long> empirical_c;
  // (n, m, deg(aG_n - bH_m), deg G_n) for each violated cell
  std::vector<std::tuple<unsigned long long, unsigned long long, long long, long long>> violations;
};

// Corollary 1 on polynomial data: deg(a G_n - b H_m) >= deg G_n - empirical_C
// over the certified region, with degrees read off the polynomials directly
// rather than through valuations. Requires mu = inf and polynomial inputs.
CorollaryReport check_corollary_degrees(const TheoremInstance& inst, unsigned long long n_max,
                                        unsigned long long m_max);

struct InequalityCheck {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

// Brownawell-Masser: for S-units u_i with 1 + u_1 + ... + u_k = 0 and no
// vanishing proper subsum, max H(u_i) <= binom(k,2) (|S| + max(0, 2g-2)).
// Preconditions are verified exactly and violations throw std::domain_error.
InequalityCheck check_brownawell_masser(std::span<const RatFunc> units, const PlaceSet& s,
                                        long long genus);

// Zannier's subspace analogue: for phi_1..phi_n linearly independent over
// the constants, S containing all poles and the zeros of phi_1..phi_r,
// sum_{nu in S} (nu(sigma) - min_i nu(phi_i)) <= binom(n,2)(|S| + 2g - 2)
//   + sum_{i>r} H(phi_i).
InequalityCheck check_zannier(std::span<const RatFunc> phis, std::size_t r, const PlaceSet& s,
                              long long genus);

// Concrete summand values of the rewritten difference at (n, m): the
// P_ig(n) pi_ig alpha_i^n in group-major order, then the
// -Q_jh(m) psi_jh beta_j^m.
std::vector<RatFunc> summand_values(const TheoremInstance& inst, unsigned long long n,
                                    unsigned long long m);

// nullopt = linearly independent over Q (equivalently over C). Otherwise a
// nonzero rational vector c with sum c_i v_i = 0: the first value dependent
// on its predecessors gets coefficient -1.
std::optional<std::vector<Rat>> dependence_certificate(std::span<const RatFunc> values);

struct SubsumWitness {
  std::vector<std::size_t> indices;  // ascending
};

// Smallest (by size, then lexicographic) subset summing to zero; such a
// subset is automatically minimal under inclusion. List length capped at 20.
std::optional<SubsumWitness> minimal_vanishing_subsum(std::span<const RatFunc> values);

}  // namespace ffrec
