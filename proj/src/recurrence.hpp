#pragma once

#include "places.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ffrec {

// Polynomial in the index n with coefficients in Q(x), stored by power of n
// with a nonzero top entry. The zero coefficient polynomial is not a valid
// recurrence coefficient.
class CoeffPoly {
 public:
  explicit CoeffPoly(std::vector<RatFunc> coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const RatFunc& operator[](std::size_t k) const { return coeffs_[k]; }
  std::size_t size() const { return coeffs_.size(); }

  RatFunc eval(unsigned long long n) const;

  bool operator==(const CoeffPoly&) const = default;

 private:
  std::vector<RatFunc> coeffs_;
};

struct RecTerm {
  CoeffPoly coeff;
  RatFunc root;
};

// Power-sum form G_n = sum_i a_i(n) * alpha_i^n with nonzero, pairwise
// distinct roots.
class LinearRecurrence {
 public:
  explicit LinearRecurrence(std::vector<RecTerm> terms);

  const std::vector<RecTerm>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

 private:
  std::vector<RecTerm> terms_;
};

RatFunc evaluate(const LinearRecurrence& g, unsigned long long n);

// G_0 .. G_n_max, sharing the incremental root powers.
std::vector<RatFunc> evaluate_range(const LinearRecurrence& g, unsigned long long n_max);

// Pair of term indices whose root ratio is constant; nullopt when
// non-degenerate.
std::optional<std::pair<std::size_t, std::size_t>> degeneracy_witness(const LinearRecurrence& g);
bool is_nondegenerate(const LinearRecurrence& g);

bool has_constant_root(const LinearRecurrence& g);

// One basis summand P(n) * pi * root^n of the rewritten recurrence. P is a
// scalar polynomial in n.
struct PiSummand {
  Poly p;
  RatFunc pi;
};

struct PiGroup {
  RatFunc root;
  std::vector<PiSummand> summands;
};

// G_n = sum_i sum_g P_ig(n) * pi_ig * alpha_i^n with, per root, the pi_ig a
// maximal Q-linearly independent subset of the coefficient functions.
struct PiForm {
  std::vector<PiGroup> groups;

  std::size_t total_basis_size() const;
  LinearRecurrence to_recurrence() const;  // expansion, for identity checks
};

// Greedy basis selection in coefficient order (earliest maximal independent
// subset); Q-independence coincides with C-independence for elements of Q(x).
PiForm pi_rewrite(const LinearRecurrence& g);

long long min_root_valuation(const LinearRecurrence& g, const Place& mu);

// true iff the first root attains the minimal valuation at mu.
bool dominant_root_ok(const LinearRecurrence& g, const Place& mu);

struct GrowthProfile {
  // gap(n) = mu(G_n) - n * min_root_valuation, for n with G_n != 0
  std::vector<std::pair<unsigned long long, long long>> gaps;
  std::vector<unsigned long long> zero_indices;  // sporadic G_n = 0
  std::optional<long long> c_minus;              // min gap observed
  std::optional<long long> c_plus;               // max gap observed
};

// Empirical growth-bound profile over n = 1..n_max; requires a
// non-degenerate recurrence.
GrowthProfile growth_profile(const LinearRecurrence& g, const Place& mu,
                             unsigned long long n_max);

}  // namespace ffrec
