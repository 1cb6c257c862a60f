#include "factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ffrec {

namespace {

// ---------------------------------------------------------------------------
// F_p[x] helpers: dense, ascending, entries in [0, p), no trailing zeros
// ---------------------------------------------------------------------------

using ZPoly = std::vector<Int>;

void ztrim(ZPoly& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Int zp_inv(const Int& a, const Int& p) { return boost::multiprecision::powm(a, p - 2, p); }

ZPoly zp_reduce(const std::vector<Int>& raw, const Int& p) {
  ZPoly v(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    v[k] = raw[k] % p;
    if (v[k] < 0) v[k] += p;
  }
  ztrim(v);
  return v;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Int& p) {
  ZPoly v(std::max(a.size(), b.size()), Int(0));
  for (std::size_t k = 0; k < a.size(); ++k) v[k] = a[k];
  for (std::size_t k = 0; k < b.size(); ++k) {
    v[k] -= b[k];
    if (v[k] < 0) v[k] += p;
  }
  ztrim(v);
  return v;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  ZPoly v(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
  }
  for (auto& c : v) c %= p;
  ztrim(v);
  return v;
}

ZPoly zmonic(const ZPoly& a, const Int& p) {
  ZPoly v = a;
  if (v.empty() || v.back() == 1) return v;
  Int inv = zp_inv(v.back(), p);
  for (auto& c : v) c = (c * inv) % p;
  return v;
}

// remainder of a mod monic b
ZPoly zrem(ZPoly a, const ZPoly& b, const Int& p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    Int q = a.back();
    std::size_t shift = a.size() - 1 - db;
    if (q != 0) {
      for (std::size_t j = 0; j < db; ++j) {
        a[shift + j] = (a[shift + j] - q * b[j]) % p;
        if (a[shift + j] < 0) a[shift + j] += p;
      }
    }
    a.pop_back();
    ztrim(a);
    if (a.size() <= db) break;
  }
  return a;
}

ZPoly zquot(ZPoly a, const ZPoly& b, const Int& p) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {};
  ZPoly q(a.size() - db, Int(0));
  while (a.size() > db) {
    Int c = a.back();
    std::size_t shift = a.size() - 1 - db;
    q[shift] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < db; ++j) {
        a[shift + j] = (a[shift + j] - c * b[j]) % p;
        if (a[shift + j] < 0) a[shift + j] += p;
      }
    }
    a.pop_back();
    ztrim(a);
  }
  ztrim(q);
  return q;
}

ZPoly zgcd(ZPoly a, ZPoly b, const Int& p) {
  while (!b.empty()) {
    ZPoly m = zmonic(b, p);
    ZPoly r = zrem(a, m, p);
    a = std::move(m);
    b = std::move(r);
  }
  return zmonic(a, p);
}

ZPoly zmulmod(const ZPoly& a, const ZPoly& b, const ZPoly& f, const Int& p) {
  return zrem(zmul(a, b, p), f, p);
}

ZPoly zpowmod(ZPoly base, Int e, const ZPoly& f, const Int& p) {
  ZPoly result{Int(1)};
  base = zrem(std::move(base), f, p);
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) result = zmulmod(result, base, f, p);
    e >>= 1;
    if (e > 0) base = zmulmod(base, base, f, p);
  }
  return result;
}

ZPoly zderiv(const ZPoly& a, const Int& p) {
  if (a.size() <= 1) return {};
  ZPoly v(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) v[k - 1] = (a[k] * k) % p;
  ztrim(v);
  return v;
}

// ---------------------------------------------------------------------------
// prime selection
// ---------------------------------------------------------------------------

bool miller_rabin(const Int& n) {
  static const int witnesses[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                  29, 31, 37, 41, 43, 47, 53, 59, 61};
  for (int w : witnesses)
    if (n == w) return true;
  if (n < 2 || n % 2 == 0) return false;
  Int d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d >>= 1;
    ++s;
  }
  for (int w : witnesses) {
    Int x = boost::multiprecision::powm(Int(w), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Int next_prime(Int candidate) {
  if (candidate < 101) candidate = 101;
  if (candidate % 2 == 0) ++candidate;
  while (!miller_rabin(candidate)) candidate += 2;
  return candidate;
}

// Mignotte-style bound: any integer factor of f has |coeff| <= 2^deg * ||f||_2.
Int factor_coeff_bound(const std::vector<Int>& f) {
  Int norm2 = 0;
  for (const Int& c : f) norm2 += c * c;
  Int root = boost::multiprecision::sqrt(norm2) + 1;
  return root << (f.size() - 1);
}

// ---------------------------------------------------------------------------
// factorization mod p: distinct-degree + equal-degree splitting
// ---------------------------------------------------------------------------

ZPoly random_zpoly(std::size_t max_deg, std::mt19937_64& rng, const Int& p) {
  unsigned words = (boost::multiprecision::msb(p) + 64) / 64;
  ZPoly v(max_deg + 1);
  for (auto& c : v) {
    Int acc = 0;
    for (unsigned w = 0; w < words; ++w) acc = (acc << 64) | Int(rng());
    c = acc % p;
  }
  ztrim(v);
  return v;
}

void equal_degree_split(const ZPoly& g, std::size_t d, const Int& p, std::mt19937_64& rng,
                        std::vector<ZPoly>& out) {
  if (g.size() - 1 == d) {
    out.push_back(g);
    return;
  }
  Int e = (boost::multiprecision::pow(p, static_cast<unsigned>(d)) - 1) / 2;
  for (;;) {
    ZPoly a = random_zpoly(g.size() - 2, rng, p);
    if (a.size() <= 1) continue;
    ZPoly t = zpowmod(a, e, g, p);
    t = zsub(t, ZPoly{Int(1)}, p);
    if (t.empty()) continue;
    ZPoly h = zgcd(g, t, p);
    if (h.size() > 1 && h.size() < g.size()) {
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(zmonic(zquot(g, h, p), p), d, p, rng, out);
      return;
    }
  }
}

std::vector<ZPoly> factor_mod_p(const ZPoly& f_in, const Int& p, std::mt19937_64& rng) {
  std::vector<ZPoly> out;
  ZPoly f = zmonic(f_in, p);
  ZPoly h{Int(0), Int(1)};  // x
  std::size_t d = 0;
  while (f.size() > 1 && 2 * (d + 1) <= f.size() - 1) {
    ++d;
    h = zpowmod(h, p, f, p);
    ZPoly g = zgcd(f, zsub(h, ZPoly{Int(0), Int(1)}, p), p);
    if (g.size() > 1) {
      equal_degree_split(g, d, p, rng, out);
      f = zmonic(zquot(f, g, p), p);
      h = zrem(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------------------
// Zassenhaus recombination (single large prime, no lifting needed)
// ---------------------------------------------------------------------------

std::vector<Int> symmetric_lift(const ZPoly& v, const Int& p) {
  std::vector<Int> out(v.size());
  Int half = p / 2;
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] > half ? Int(v[k] - p) : v[k];
  return out;
}

Poly primitive_part(const Poly& p) { return poly_from_ints(to_integer_primitive(p).second); }

// input: primitive, squarefree, positive leading coefficient, degree >= 1
std::vector<Poly> factor_squarefree_int(const std::vector<Int>& f_int) {
  Poly f = poly_from_ints(f_int);
  if (f.degree() == 1) return {f};

  const Int lead = f_int.back();
  Int p = next_prime(2 * lead * factor_coeff_bound(f_int) + 1);
  ZPoly fp;
  for (;;) {
    fp = zp_reduce(f_int, p);
    if (fp.size() == f_int.size() && zgcd(fp, zderiv(fp, p), p).size() == 1) break;
    p = next_prime(p + 2);  // p divides lc or disc; finitely many such primes
  }

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::vector<ZPoly> pool = factor_mod_p(fp, p, rng);
  std::sort(pool.begin(), pool.end(), [&](const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = a.size(); k-- > 0;)
      if (a[k] != b[k]) return a[k] < b[k];
    return false;
  });

  std::vector<Poly> result;
  Poly current = f;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t k = 0; k < s; ++k) idx[k] = k;
    for (;;) {
      ZPoly prod{current.leading().convert_to<Int>() % p};
      if (prod[0] < 0) prod[0] += p;
      for (std::size_t k : idx) prod = zmul(prod, pool[k], p);
      Poly candidate = primitive_part(poly_from_ints(symmetric_lift(prod, p)));
      auto [q, r] = divmod(current, candidate);
      if (r.is_zero() && !candidate.is_constant()) {
        result.push_back(candidate);
        current = primitive_part(q);
        std::vector<ZPoly> rest;
        for (std::size_t k = 0; k < pool.size(); ++k)
          if (std::find(idx.begin(), idx.end(), k) == idx.end()) rest.push_back(pool[k]);
        pool = std::move(rest);
        found = true;
        break;
      }
      // next subset of size s in lexicographic order
      std::size_t j = s;
      while (j-- > 0) {
        if (idx[j] != pool.size() - s + j) {
          ++idx[j];
          for (std::size_t k = j + 1; k < s; ++k) idx[k] = idx[k - 1] + 1;
          break;
        }
        if (j == 0) goto size_done;
      }
      continue;
    size_done:
      break;
    }
    if (!found) ++s;
  }
  if (!current.is_constant()) result.push_back(current);
  return result;
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  Poly f = p.monic();
  if (f.is_constant()) return {};
  Poly g = gcd(f, f.derivative());
  if (g.is_constant()) return {{f, 1}};
  std::vector<std::pair<Poly, int>> out;
  Poly b = exact_div(f, g);
  Poly c = exact_div(f.derivative(), g);
  Poly d = c - b.derivative();
  int i = 1;
  while (!b.is_constant()) {
    Poly a = gcd(b, d);
    if (!a.is_constant()) out.emplace_back(a, i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Poly Factorization::expand() const {
  Poly acc{Rat(unit)};
  for (const auto& [f, mult] : factors) acc = acc * pow(f, static_cast<unsigned long long>(mult));
  return acc;
}

Factorization factor(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  Factorization out;
  if (p.is_constant()) {
    out.unit = p.coeff(0);
    return out;
  }
  out.unit = p.leading();
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    auto [content, ints] = to_integer_primitive(part);
    (void)content;  // part is monic, so the content cancels against the factor leads
    for (const Poly& f : factor_squarefree_int(ints)) out.factors.emplace_back(f.monic(), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  if (!(out.expand() == p)) throw std::logic_error("factorization verification failed");
  return out;
}

bool is_irreducible(const Poly& p) {
  if (p.is_zero() || p.is_constant()) return false;
  Factorization f = factor(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace ffrec
