#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ffrec {

// Exact arbitrary-precision scalars. cpp_rational keeps gcd(num, den) = 1
// and den >= 1 canonically.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string int_to_string(const Int& n) { return n.str(); }

inline std::string rat_to_string(const Rat& r) {
  if (denom(r) == 1) return numer(r).str();
  return numer(r).str() + "/" + denom(r).str();
}

inline Int binomial(const Int& n, unsigned k) {
  if (n < 0) return 0;
  Int result = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (n <= i) return 0;
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

}  // namespace ffrec
