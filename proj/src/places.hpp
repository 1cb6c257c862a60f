#pragma once

#include "ratfunc.hpp"

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>

namespace ffrec {

// Value of a valuation: an integer, or +infinity exactly for nu(0).
class ExtInt {
 public:
  ExtInt() : value_(0) {}
  ExtInt(long long v) : value_(v) {}  // NOLINT: implicit by design
  static ExtInt infinity() {
    ExtInt e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  long long value() const;  // throws std::domain_error when infinite

  // infinity absorbs addition; infinity - finite = infinity;
  // finite - infinity and infinity - infinity are errors
  friend ExtInt operator+(const ExtInt& a, const ExtInt& b);
  friend ExtInt operator-(const ExtInt& a, const ExtInt& b);
  friend ExtInt min(const ExtInt& a, const ExtInt& b);

  bool operator==(const ExtInt&) const = default;
  // infinity compares greater than every integer
  bool operator<(const ExtInt& o) const;
  bool operator<=(const ExtInt& o) const { return *this < o || *this == o; }

  std::string to_string() const;

 private:
  bool infinite_ = false;
  long long value_;
};

// A valuation site of Q(x) inside C(x): a monic irreducible polynomial
// (standing for its Galois orbit of deg-many C-points) or the place at
// infinity. Ordering: finite places by (degree, coefficients), then inf.
class Place {
 public:
  static Place infinite();
  // validates monic + irreducible (factors the input); error lists factors
  static Place finite(const Poly& p);
  // trusted constructor for polynomials already known irreducible
  static Place finite_unchecked(Poly p);

  bool is_infinite() const { return !poly_.has_value(); }
  const Poly& poly() const;  // throws for the infinite place
  long long degree() const { return poly_ ? static_cast<long long>(poly_->degree()) : 1; }

  std::string to_string() const;

  bool operator==(const Place&) const = default;
  bool operator<(const Place& o) const;

 private:
  Place() = default;
  std::optional<Poly> poly_;
};

using PlaceSet = std::set<Place>;

// Number of C(x)-valuations the set stands for: sum of place degrees. This
// is the |S| entering all unit-equation bounds.
long long weighted_size(const PlaceSet& s);

std::string place_set_to_string(const PlaceSet& s);

// Finite support mapping Place -> nonzero exponent. For a divisor of a
// nonzero field element the degree-weighted exponent sum is 0.
class Divisor {
 public:
  Divisor() = default;

  void add(const Place& p, long long exponent);
  long long exponent(const Place& p) const;  // 0 when absent
  PlaceSet support() const;
  long long weighted_degree() const;
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool operator==(const Divisor&) const = default;

  std::string to_string() const;  // "place:exp" pairs in place order

 private:
  std::map<Place, long long> entries_;
};

// nu_p(f) or nu_inf(f); nu(0) = +infinity.
ExtInt valuation(const Place& p, const RatFunc& f);

// Complete divisor of a nonzero element; throws "zero has no divisor".
Divisor divisor(const RatFunc& f);

// H(f) = sum over places of deg * max(0, nu(f)) = max(deg num, deg den);
// H(0) = +infinity.
ExtInt height(const RatFunc& f);
long long height_finite(const RatFunc& f);  // throws on zero input

bool is_s_unit(const RatFunc& f, const PlaceSet& s);

// Union of the supports of fs plus extra; the smallest S making every f an
// S-unit. Throws on zero entries.
PlaceSet minimal_s(std::span<const RatFunc> fs, const PlaceSet& extra = {});

}  // namespace ffrec
