#pragma once

#include "poly.hpp"

#include <utility>
#include <vector>

namespace ffrec {

// Complete factorization over Q: unit * prod(factor_i ^ mult_i) with monic
// irreducible factors, sorted by (degree, coefficient order). Constants
// factor as a bare unit.
struct Factorization {
  Rat unit{1};
  std::vector<std::pair<Poly, int>> factors;

  Poly expand() const;
};

// Deterministic factorization of a nonzero polynomial; throws
// std::domain_error on zero input.
Factorization factor(const Poly& p);

// Monic squarefree parts with multiplicities (Yun), empty for constants.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

bool is_irreducible(const Poly& p);

}  // namespace ffrec
