#pragma once

#include "rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace ffrec {

// Univariate polynomial with exact rational coefficients, stored densely in
// ascending powers with no trailing zero. The zero polynomial is the empty
// coefficient sequence; its degree is deliberately not an integer and
// degree() throws for it.
class Poly {
 public:
  Poly() = default;  // zero
  explicit Poly(Rat constant);
  explicit Poly(std::vector<Rat> coeffs);

  static Poly x();
  static Poly monomial(std::size_t k, Rat c = Rat(1));

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  std::size_t degree() const;          // throws std::domain_error on zero
  const Rat& leading() const;          // throws std::domain_error on zero
  const Rat& coeff(std::size_t k) const;
  std::span<const Rat> coeffs() const { return coeffs_; }

  bool is_monic() const { return !is_zero() && leading() == 1; }
  Poly monic() const;

  Rat eval(const Rat& v) const;
  Poly derivative() const;
  Poly compose(const Poly& inner) const;

  std::string to_string(const char* var = "x") const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& p);

  bool operator==(const Poly&) const = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct PolyDivMod {
  Poly quot;
  Poly rem;
};

// Euclidean division; throws std::domain_error("division by zero") if b = 0.
PolyDivMod divmod(const Poly& a, const Poly& b);

// p = content * primitive with integer coefficients and positive leading
// coefficient; the sign lives in the content. Requires p != 0.
std::pair<Rat, std::vector<Int>> to_integer_primitive(const Poly& p);

Poly poly_from_ints(const std::vector<Int>& coeffs);

// Exact quotient; throws std::logic_error when the division leaves a remainder.
Poly exact_div(const Poly& a, const Poly& b);

// Monic gcd; throws std::domain_error when both arguments are zero.
Poly gcd(const Poly& a, const Poly& b);

// Monic lcm of two nonzero polynomials.
Poly lcm(const Poly& a, const Poly& b);

Poly pow(const Poly& base, unsigned long long e);

// Total order: zero first, then by degree, then coefficients from x^0 up.
int compare(const Poly& a, const Poly& b);

}  // namespace ffrec
