#include "ratfunc.hpp"

#include <stdexcept>

namespace ffrec {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (num.is_zero()) {
    num_ = Poly{};
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = gcd(num, den);
  Poly n = exact_div(num, g);
  Poly d = exact_div(den, g);
  const Rat lc = d.leading();
  den_ = d.monic();
  num_ = (Rat(1) / lc) * n;
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw std::domain_error("not a constant");
  if (is_zero()) return Rat(0);
  return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::from_reduced(Poly num, Poly den) {
  RatFunc r;
  if (num.is_zero()) return r;
  const Rat lc = den.leading();
  r.den_ = den.monic();
  r.num_ = lc == 1 ? std::move(num) : (Rat(1) / lc) * num;
  return r;
}

RatFunc RatFunc::reciprocal() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return from_reduced(den_, num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

// fraction addition for reduced inputs (Henrici): any common factor of the
// naive numerator and denominator divides gcd(den_a, den_b), so only small
// gcds are ever computed
RatFunc add_reduced(const RatFunc& a, const RatFunc& b, bool negate_b) {
  Poly bn = negate_b ? -b.num() : b.num();
  Poly d1 = gcd(a.den(), b.den());
  if (d1.is_constant()) {
    Poly num = a.num() * b.den() + bn * a.den();
    if (num.is_zero()) return RatFunc{};
    return RatFunc(num, a.den() * b.den());
  }
  Poly t = a.num() * exact_div(b.den(), d1) + bn * exact_div(a.den(), d1);
  if (t.is_zero()) return RatFunc{};
  Poly d2 = gcd(t, d1);
  Poly num = d2.is_constant() ? std::move(t) : exact_div(t, d2);
  Poly den = exact_div(a.den(), d1) * exact_div(b.den(), d2);
  return RatFunc(num, den);
}

}  // namespace

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return add_reduced(a, b, false);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return -b;
  if (b.is_zero()) return a;
  return add_reduced(a, b, true);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc{};
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly num = (g1.is_constant() ? a.num_ : exact_div(a.num_, g1)) *
             (g2.is_constant() ? b.num_ : exact_div(b.num_, g2));
  Poly den = (g2.is_constant() ? a.den_ : exact_div(a.den_, g2)) *
             (g1.is_constant() ? b.den_ : exact_div(b.den_, g1));
  return RatFunc::from_reduced(std::move(num), std::move(den));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return a * b.reciprocal();
}

RatFunc pow(const RatFunc& base, long long e) {
  if (e < 0) return pow(base.reciprocal(), -e);
  if (base.is_zero()) return e == 0 ? RatFunc(Rat(1)) : RatFunc{};
  // powers of a reduced fraction stay reduced; no gcd needed
  unsigned long long u = static_cast<unsigned long long>(e);
  return RatFunc::from_reduced(pow(base.num_, u), pow(base.den_, u));
}

RatFunc apply_poly(const Poly& a, const RatFunc& f) {
  RatFunc acc;
  for (std::size_t k = a.coeffs().size(); k-- > 0;)
    acc = acc * f + RatFunc(a.coeff(k));
  return acc;
}

int compare(const RatFunc& a, const RatFunc& b) {
  if (int c = compare(a.num(), b.num()); c != 0) return c;
  return compare(a.den(), b.den());
}

std::string RatFunc::to_string() const {
  if (den_ == Poly(Rat(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace ffrec
