#pragma once

#include "ratfunc.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ffrec {

// Coefficients expressing target as a linear combination of the given
// vectors (all of equal length), or nullopt when target is outside their
// span. Plain Gaussian elimination over Q; exact.
std::optional<std::vector<Rat>> solve_in_span(const std::vector<std::vector<Rat>>& vectors,
                                              const std::vector<Rat>& target);

// Clears denominators: coordinates of f_i * lcm(den_j) as coefficient rows
// of common length. Q-linear relations among the f_i are exactly the
// relations among these rows.
std::vector<std::vector<Rat>> ratfunc_coordinates(std::span<const RatFunc> fs);

}  // namespace ffrec
