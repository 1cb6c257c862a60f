#include "places.hpp"

#include "factor.hpp"

#include <sstream>
#include <stdexcept>

namespace ffrec {

long long ExtInt::value() const {
  if (infinite_) throw std::domain_error("infinite valuation has no integer value");
  return value_;
}

ExtInt operator+(const ExtInt& a, const ExtInt& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtInt::infinity();
  return ExtInt(a.value_ + b.value_);
}

ExtInt operator-(const ExtInt& a, const ExtInt& b) {
  if (b.is_infinite()) throw std::domain_error("cannot subtract an infinite valuation");
  if (a.is_infinite()) return ExtInt::infinity();
  return ExtInt(a.value_ - b.value_);
}

ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }

bool ExtInt::operator<(const ExtInt& o) const {
  if (infinite_) return false;
  if (o.infinite_) return true;
  return value_ < o.value_;
}

std::string ExtInt::to_string() const {
  return infinite_ ? "inf" : std::to_string(value_);
}

Place Place::infinite() { return Place{}; }

Place Place::finite_unchecked(Poly p) {
  Place pl;
  pl.poly_ = std::move(p);
  return pl;
}

Place Place::finite(const Poly& p) {
  if (p.is_zero() || p.is_constant())
    throw std::domain_error("a finite place must be a nonconstant polynomial");
  Poly m = p.monic();
  Factorization f = factor(m);
  if (f.factors.size() != 1 || f.factors[0].second != 1) {
    std::string msg = "polynomial is not irreducible; factors:";
    for (const auto& [g, mult] : f.factors) {
      msg += " " + g.to_string();
      if (mult > 1) msg += "^" + std::to_string(mult);
    }
    throw std::domain_error(msg);
  }
  return finite_unchecked(std::move(m));
}

const Poly& Place::poly() const {
  if (!poly_) throw std::domain_error("the infinite place has no polynomial");
  return *poly_;
}

std::string Place::to_string() const { return poly_ ? poly_->to_string() : "inf"; }

bool Place::operator<(const Place& o) const {
  if (is_infinite() != o.is_infinite()) return o.is_infinite();
  if (is_infinite()) return false;
  return compare(*poly_, *o.poly_) < 0;
}

long long weighted_size(const PlaceSet& s) {
  long long total = 0;
  for (const Place& p : s) total += p.degree();
  return total;
}

std::string place_set_to_string(const PlaceSet& s) {
  std::string out;
  for (const Place& p : s) {
    if (!out.empty()) out += " ";
    out += p.to_string();
  }
  return out;
}

void Divisor::add(const Place& p, long long exponent) {
  if (exponent == 0) return;
  auto [it, inserted] = entries_.emplace(p, exponent);
  if (!inserted) {
    it->second += exponent;
    if (it->second == 0) entries_.erase(it);
  }
}

long long Divisor::exponent(const Place& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? 0 : it->second;
}

PlaceSet Divisor::support() const {
  PlaceSet s;
  for (const auto& [p, e] : entries_) s.insert(p);
  return s;
}

long long Divisor::weighted_degree() const {
  long long total = 0;
  for (const auto& [p, e] : entries_) total += p.degree() * e;
  return total;
}

std::string Divisor::to_string() const {
  std::string out;
  for (const auto& [p, e] : entries_) {
    if (!out.empty()) out += " ";
    out += p.to_string() + ":" + std::to_string(e);
  }
  return out;
}

namespace {

// multiplicity of the irreducible q in the nonzero polynomial p
long long multiplicity(const Poly& q, const Poly& p) {
  long long count = 0;
  Poly rest = p;
  for (;;) {
    auto [quot, rem] = divmod(rest, q);
    if (!rem.is_zero()) return count;
    rest = std::move(quot);
    ++count;
  }
}

}  // namespace

ExtInt valuation(const Place& p, const RatFunc& f) {
  if (f.is_zero()) return ExtInt::infinity();
  if (p.is_infinite())
    return ExtInt(static_cast<long long>(f.den().degree()) -
                  static_cast<long long>(f.num().degree()));
  // num and den are coprime, so at most one of the two counts is nonzero
  long long up = multiplicity(p.poly(), f.num());
  if (up > 0) return ExtInt(up);
  return ExtInt(-multiplicity(p.poly(), f.den()));
}

Divisor divisor(const RatFunc& f) {
  if (f.is_zero()) throw std::domain_error("zero has no divisor");
  Divisor d;
  for (const auto& [g, mult] : factor(f.num()).factors)
    d.add(Place::finite_unchecked(g), mult);
  for (const auto& [g, mult] : factor(f.den()).factors)
    d.add(Place::finite_unchecked(g), -mult);
  d.add(Place::infinite(), static_cast<long long>(f.den().degree()) -
                               static_cast<long long>(f.num().degree()));
  return d;
}

ExtInt height(const RatFunc& f) {
  if (f.is_zero()) return ExtInt::infinity();
  return ExtInt(static_cast<long long>(std::max(f.num().degree(), f.den().degree())));
}

long long height_finite(const RatFunc& f) {
  if (f.is_zero()) throw std::domain_error("height of zero is infinite");
  return height(f).value();
}

bool is_s_unit(const RatFunc& f, const PlaceSet& s) {
  if (f.is_zero()) throw std::domain_error("zero is not an S-unit");
  for (const auto& [p, e] : divisor(f))
    if (!s.contains(p)) return false;
  return true;
}

PlaceSet minimal_s(std::span<const RatFunc> fs, const PlaceSet& extra) {
  PlaceSet s = extra;
  for (const RatFunc& f : fs) {
    if (f.is_zero()) throw std::domain_error("zero has no divisor");
    for (const auto& [p, e] : divisor(f)) s.insert(p);
  }
  return s;
}

}  // namespace ffrec
