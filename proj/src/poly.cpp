#include "poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace ffrec {

namespace {
const Rat kZero = Rat(0);
}

Poly::Poly(Rat constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return monomial(1); }

Poly Poly::monomial(std::size_t k, Rat c) {
  if (c == 0) return Poly{};
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t Poly::degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  return coeffs_.size() - 1;
}

const Rat& Poly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

const Rat& Poly::coeff(std::size_t k) const {
  if (k >= coeffs_.size()) return kZero;
  return coeffs_[k];
}

Poly Poly::monic() const {
  const Rat& lc = leading();
  if (lc == 1) return *this;
  Poly r = *this;
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

Rat Poly::eval(const Rat& v) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly{};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rat(k) * coeffs_[k];
  return Poly(std::move(d));
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * inner + Poly(*it);
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] -= b.coeffs_[k];
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(v));
}

Poly operator*(const Rat& s, const Poly& p) {
  if (s == 0) return Poly{};
  Poly r = p;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero() || (!a.is_zero() && a.degree() < b.degree())) return {Poly{}, a};
  std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = b.degree();
  std::vector<Rat> quot(a.degree() - db + 1, Rat(0));
  const Rat& lc = b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rat q = rem[k] / lc;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeff(j);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

std::pair<Rat, std::vector<Int>> to_integer_primitive(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("primitive part of zero polynomial");
  Int den_lcm = 1;
  for (const Rat& c : p.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, denom(c));
  std::vector<Int> ints(p.coeffs().size());
  Int content = 0;
  for (std::size_t k = 0; k < ints.size(); ++k) {
    ints[k] = numer(p.coeff(k)) * (den_lcm / denom(p.coeff(k)));
    content = boost::multiprecision::gcd(content, ints[k]);
  }
  if (ints.back() < 0) content = -content;
  for (auto& c : ints) c /= content;
  return {Rat(content, den_lcm), std::move(ints)};
}

Poly poly_from_ints(const std::vector<Int>& coeffs) {
  std::vector<Rat> c(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) c[k] = Rat(coeffs[k]);
  return Poly(std::move(c));
}

namespace {

// gcd(a, b) mod p has at least the degree of the rational gcd whenever p
// divides neither leading coefficient, so a constant modular gcd certifies
// coprimality. One word-sized prime settles the overwhelmingly common case
// without any big-integer growth.
bool coprime_mod_word_prime(const std::vector<Int>& a, const std::vector<Int>& b) {
  static constexpr unsigned long long primes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL};
  for (unsigned long long p : primes) {
    if (a.back() % p == 0 || b.back() % p == 0) continue;
    auto reduce = [&](const std::vector<Int>& v) {
      std::vector<unsigned long long> out(v.size());
      for (std::size_t k = 0; k < v.size(); ++k) {
        Int r = v[k] % p;
        if (r < 0) r += p;
        out[k] = r.convert_to<unsigned long long>();
      }
      while (!out.empty() && out.back() == 0) out.pop_back();
      return out;
    };
    std::vector<unsigned long long> u = reduce(a), v = reduce(b);
    auto mod_inv = [&](unsigned long long x) {
      unsigned long long result = 1, base = x, e = p - 2;
      while (e) {
        if (e & 1) result = static_cast<unsigned __int128>(result) * base % p;
        base = static_cast<unsigned __int128>(base) * base % p;
        e >>= 1;
      }
      return result;
    };
    while (!v.empty()) {
      unsigned long long inv = mod_inv(v.back());
      while (u.size() >= v.size() && !u.empty()) {
        unsigned long long q = static_cast<unsigned __int128>(u.back()) * inv % p;
        std::size_t shift = u.size() - v.size();
        for (std::size_t k = 0; k < v.size(); ++k) {
          unsigned long long sub = static_cast<unsigned __int128>(q) * v[k] % p;
          unsigned long long& slot = u[shift + k];
          slot = slot >= sub ? slot - sub : slot + p - sub;
        }
        while (!u.empty() && u.back() == 0) u.pop_back();
      }
      std::swap(u, v);
    }
    return u.size() <= 1;
  }
  return false;  // no usable prime; let the exact path decide
}

// primitive pseudo-remainder sequence over Z
std::vector<Int> primitive_prs_gcd(std::vector<Int> u, std::vector<Int> v) {
  auto make_primitive = [](std::vector<Int>& w) {
    Int g = 0;
    for (const Int& c : w) g = boost::multiprecision::gcd(g, c);
    if (w.back() < 0) g = -g;
    for (auto& c : w) c /= g;
  };
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    // pseudo-remainder of u by v
    std::vector<Int> r = u;
    const Int& lead = v.back();
    while (r.size() >= v.size()) {
      Int top = r.back();
      std::size_t shift = r.size() - v.size();
      for (auto& c : r) c *= lead;
      for (std::size_t k = 0; k < v.size(); ++k) r[shift + k] -= top * v[k];
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    if (!r.empty()) make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(Rat(1));
  std::vector<Int> u = to_integer_primitive(a).second;
  std::vector<Int> v = to_integer_primitive(b).second;
  if (coprime_mod_word_prime(u, v)) return Poly(Rat(1));
  return poly_from_ints(primitive_prs_gcd(std::move(u), std::move(v))).monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("lcm of zero polynomial");
  return exact_div(a * b, gcd(a, b)).monic();
}

Poly pow(const Poly& base, unsigned long long e) {
  Poly result{Rat(1)};
  Poly b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

int compare(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return 0;
    return a.is_zero() ? -1 : 1;
  }
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t k = 0; k <= a.degree(); ++k) {
    if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k) ? -1 : 1;
  }
  return 0;
}

std::string Poly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rat& c = coeffs_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? '-' : '+');
    }
    if (k == 0) {
      out << rat_to_string(mag);
    } else {
      if (mag != 1) out << rat_to_string(mag) << '*';
      out << var;
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

}  // namespace ffrec
