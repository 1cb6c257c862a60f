#pragma once

#include "poly.hpp"

#include <string>

namespace ffrec {

// Reduced rational function over Q(x). Canonical form: monic denominator,
// gcd(num, den) = 1, and the zero element is 0/1. Equality of canonical
// representatives is field equality.
class RatFunc {
 public:
  RatFunc() : den_(Rat(1)) {}  // zero
  explicit RatFunc(Rat c) : num_(std::move(c)), den_(Rat(1)) {}
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(Rat(1)) {}
  RatFunc(const Poly& num, const Poly& den);  // normalizes

  static RatFunc x() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const;  // throws if not constant

  RatFunc reciprocal() const;  // throws on zero
  RatFunc operator-() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  bool operator==(const RatFunc&) const = default;

  std::string to_string() const;

 private:
  // pre: gcd(num, den) = 1 and den != 0; only rescales to a monic denominator
  static RatFunc from_reduced(Poly num, Poly den);

  Poly num_;
  Poly den_;

  friend RatFunc pow(const RatFunc& base, long long e);
};

RatFunc pow(const RatFunc& base, long long e);

// A(f) for a scalar polynomial A in one indeterminate.
RatFunc apply_poly(const Poly& a, const RatFunc& f);

int compare(const RatFunc& a, const RatFunc& b);

}  // namespace ffrec
