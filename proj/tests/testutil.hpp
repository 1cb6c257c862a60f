#pragma once

#include "parse.hpp"

#include <random>
#include <string>
#include <vector>

namespace ffrec::testing {

inline RatFunc rf(const std::string& text) { return parse_ratfunc(text); }
inline Poly pl(const std::string& text) { return parse_poly(text); }

inline Rat random_rat(std::mt19937_64& rng, long long height) {
  std::uniform_int_distribution<long long> num(-height, height);
  std::uniform_int_distribution<long long> den(1, height);
  return Rat(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937_64& rng, std::size_t max_deg, long long height,
                        bool nonzero = true) {
  std::uniform_int_distribution<std::size_t> deg(0, max_deg);
  std::uniform_int_distribution<long long> coeff(-height, height);
  for (;;) {
    std::size_t d = deg(rng);
    std::vector<Rat> c(d + 1);
    for (auto& v : c) v = Rat(coeff(rng));
    Poly p{std::move(c)};
    if (!nonzero || !p.is_zero()) return p;
  }
}

inline RatFunc random_ratfunc(std::mt19937_64& rng, std::size_t max_deg, long long height,
                              bool nonzero = true) {
  Poly num = random_poly(rng, max_deg, height, nonzero);
  Poly den = random_poly(rng, max_deg, height, true);
  return RatFunc(num, den);
}

}  // namespace ffrec::testing
