#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "knotwork/algebra/poly.hpp"

namespace knotwork {

struct Factorization {
  Integer content = 0;                           // signed; p = content * prod f^e
  std::vector<std::pair<IntPoly, int>> factors;  // irreducible, primitive, lc > 0
};

inline constexpr int kMaxFactorDegree = 24;

namespace detail::modp {

using Coeffs = std::vector<std::int64_t>;

inline std::int64_t md(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = md(a, p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return md(t, p);
}

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Coeffs reduce(const IntPoly& f, std::int64_t p) {
  Coeffs c;
  for (const auto& a : f.coeffs()) {
    Integer r = a % p;
    if (r < 0) r += p;
    c.push_back(static_cast<std::int64_t>(r));
  }
  trim(c);
  return c;
}

inline Coeffs sub(Coeffs a, const Coeffs& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = md(a[i] - b[i], p);
  trim(a);
  return a;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

inline std::pair<Coeffs, Coeffs> divmod(Coeffs a, const Coeffs& b, std::int64_t p) {
  std::int64_t il = inv(b.back(), p);
  if (a.size() < b.size()) return {{}, a};
  Coeffs q(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    std::int64_t f = a[k] * il % p;
    q[k - b.size() + 1] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[k - b.size() + 1 + j] = md(a[k - b.size() + 1 + j] - f * b[j], p);
    if (k == 0) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Coeffs monic(Coeffs a, std::int64_t p) {
  std::int64_t il = inv(a.back(), p);
  for (auto& x : a) x = x * il % p;
  return a;
}

inline Coeffs gcd(Coeffs a, Coeffs b, std::int64_t p) {
  while (!b.empty()) {
    Coeffs r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(a, p);
}

inline Coeffs powmod(Coeffs base, Integer e, const Coeffs& f, std::int64_t p) {
  Coeffs r{1};
  base = divmod(base, f, p).second;
  while (e > 0) {
    if ((e & 1) != 0) r = divmod(mul(r, base, p), f, p).second;
    base = divmod(mul(base, base, p), f, p).second;
    e >>= 1;
  }
  return r;
}

// Distinct-degree factorization of a monic squarefree f: (product, degree).
inline std::vector<std::pair<Coeffs, int>> distinct_degree(Coeffs f, std::int64_t p) {
  std::vector<std::pair<Coeffs, int>> out;
  Coeffs x{0, 1}, h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = powmod(h, p, f, p);
    Coeffs g = gcd(f, sub(h, x, p), p);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = divmod(h, f, p).second;
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

// Cantor-Zassenhaus split of a product of irreducibles of degree d (p odd).
inline void equal_degree(const Coeffs& f, int d, std::int64_t p, std::mt19937_64& rng,
                         std::vector<Coeffs>& out) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(monic(f, p));
    return;
  }
  Integer e = 1;
  for (int i = 0; i < d; ++i) e *= p;
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  while (true) {
    Coeffs a(n, 0);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (a.size() < 2) continue;
    Coeffs b = powmod(a, e, f, p);
    if (b.empty()) continue;
    b[0] = md(b[0] - 1, p);
    trim(b);
    Coeffs g = gcd(f, b, p);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

inline std::vector<Coeffs> factor_squarefree(const Coeffs& f, std::int64_t p) {
  std::mt19937_64 rng(0x5eed + p);
  std::vector<Coeffs> out;
  for (const auto& [g, d] : distinct_degree(monic(f, p), p)) equal_degree(g, d, p, rng, out);
  return out;
}

}  // namespace detail::modp

namespace detail {

inline IntPoly mod_sym(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c;
  for (auto a : f.coeffs()) {
    a %= m;
    if (a < 0) a += m;
    if (2 * a > m) a -= m;
    c.push_back(a);
  }
  return IntPoly(std::move(c));
}

inline IntPoly mod_pos(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c;
  for (auto a : f.coeffs()) {
    a %= m;
    if (a < 0) a += m;
    c.push_back(a);
  }
  return IntPoly(std::move(c));
}

inline IntPoly lift_coeffs(const modp::Coeffs& c) {
  std::vector<Integer> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

// Division by a monic polynomial with integer arithmetic, remainder reduced mod m.
inline std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b, const Integer& m) {
  std::vector<Integer> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {IntPoly{}, mod_pos(a, m)};
  std::vector<Integer> q(a.degree() - db + 1, Integer(0));
  for (int k = a.degree(); k >= db; --k) {
    Integer f = r[k] % m;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] = (r[k - db + j] - f * b.coeff(j)) % m;
  }
  return {mod_pos(IntPoly(std::move(q)), m), mod_pos(IntPoly(std::move(r)), m)};
}

// Lifts f = a * b (mod p), b monic and coprime to a mod p, to a factorization
// modulo p^k. The leading coefficient of f stays on a.
inline std::pair<IntPoly, IntPoly> hensel_lift(const IntPoly& f, IntPoly a, IntPoly b, std::int64_t p, int k) {
  using namespace modp;
  Coeffs ap = reduce(a, p), bp = reduce(b, p);
  // s*a + t*b = 1 (mod p)
  Coeffs r0 = ap, r1 = bp, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = modp::divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Coeffs ns = sub(s0, mul(q, s1, p), p), nt = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(ns);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  std::int64_t il = inv(r0.at(0), p);
  for (auto& x : s0) x = x * il % p;
  for (auto& x : t0) x = x * il % p;
  IntPoly s = lift_coeffs(s0), t = lift_coeffs(t0);

  Integer m = p;
  for (int step = 1; step < k; ++step) {
    IntPoly diff = f - a * b;
    std::vector<Integer> ec;
    for (const auto& c : diff.coeffs()) ec.push_back(c / m);
    IntPoly e = mod_pos(IntPoly(std::move(ec)), Integer(p));
    auto [q, beta] = divmod_monic(mod_pos(s * e, Integer(p)), b, Integer(p));
    (void)q;
    IntPoly rest = mod_pos(e - a * beta, Integer(p));
    IntPoly alpha = divmod_monic(rest, b, Integer(p)).first;
    a = a + Integer(m) * alpha;
    b = b + Integer(m) * beta;
    m *= p;
    a = mod_sym(a, m);
    b = mod_sym(b, m);
  }
  return {a, b};
}

inline void hensel_tree(const IntPoly& f, const std::vector<modp::Coeffs>& fs, std::int64_t p, int k,
                        const Integer& mod, std::vector<IntPoly>& out) {
  if (fs.size() == 1) {
    // f is lc * monic factor mod p^k; normalize to the monic lift.
    Integer il;
    {
      // inverse of lc modulo p^k via extended Euclid on Integers
      Integer a = f.lc() % mod, m = mod, x0 = 1, x1 = 0;
      if (a < 0) a += mod;
      while (m != 0) {
        Integer q = a / m;
        std::tie(a, m) = std::make_pair(m, a - q * m);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
      }
      il = x0;
    }
    out.push_back(mod_sym(il * f, mod));
    return;
  }
  std::size_t half = fs.size() / 2;
  modp::Coeffs prod_b{1};
  for (std::size_t i = half; i < fs.size(); ++i) prod_b = modp::mul(prod_b, fs[i], p);
  modp::Coeffs fp = modp::reduce(f, p);
  modp::Coeffs prod_a = modp::divmod(fp, prod_b, p).first;
  auto [a, b] = hensel_lift(f, lift_coeffs(prod_a), lift_coeffs(prod_b), p, k);
  hensel_tree(a, {fs.begin(), fs.begin() + half}, p, k, mod, out);
  hensel_tree(b, {fs.begin() + half, fs.end()}, p, k, mod, out);
}

inline std::vector<Integer> divisors(Integer n) {
  n = abs_int(n);
  std::vector<Integer> d;
  for (Integer i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  return d;
}

// Strips linear factors with rational roots from a primitive squarefree f.
inline std::vector<IntPoly> strip_rational_roots(IntPoly& f) {
  std::vector<IntPoly> found;
  if (f.coeff(0) == 0) {
    found.push_back(IntPoly{0, 1});
    f = exact_div(f, IntPoly{0, 1});
  }
  if (f.degree() <= 0) return found;
  // bounded candidate search; huge constant terms fall through to Zassenhaus
  if (abs_int(f.coeff(0)) > Integer(1000000) || abs_int(f.lc()) > Integer(1000000)) return found;
  for (const auto& num : divisors(f.coeff(0)))
    for (const auto& den : divisors(f.lc()))
      for (int sg : {1, -1}) {
        if (f.degree() < 1) return found;
        if (gcd_int(num, den) != 1) continue;
        Rational r(sg * num, den);
        if (f.eval(r) == 0) {
          IntPoly lin{-sg * num, den};
          found.push_back(lin);
          f = exact_div(f, lin);
        }
      }
  return found;
}

inline std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  if (f.degree() <= 1) return {f};
  static const std::int64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                        53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109};
  std::int64_t best_p = 0;
  std::vector<modp::Coeffs> best;
  int tried = 0;
  for (std::int64_t p : primes) {
    if (f.lc() % p == 0) continue;
    modp::Coeffs fp = modp::reduce(f, p);
    modp::Coeffs dp = modp::reduce(f.derivative(), p);
    if (dp.empty() || modp::gcd(fp, dp, p).size() != 1) continue;
    auto fs = modp::factor_squarefree(fp, p);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = fs;
    }
    if (best.size() == 1 || ++tried >= 6) break;
  }
  if (best_p == 0) throw BudgetError("no suitable prime for factorization");
  if (best.size() == 1) return {f};

  // Mignotte-style bound on coefficients of any factor, times lc.
  Integer norm2 = 0;
  for (const auto& a : f.coeffs()) norm2 += a * a;
  Integer bound = (Integer(1) << (f.degree() + 1)) * (boost::multiprecision::sqrt(norm2) + 1) * abs_int(f.lc());
  int k = 1;
  Integer mod = best_p;
  while (mod <= 2 * bound) {
    mod *= best_p;
    ++k;
  }
  std::vector<IntPoly> lifted;
  hensel_tree(f, best, best_p, k, mod, lifted);

  std::vector<IntPoly> result;
  IntPoly g = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<int> pick(lifted.size(), 0);
    std::fill(pick.end() - s, pick.end(), 1);
    do {
      IntPoly cand = IntPoly::constant(g.lc());
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (pick[i]) cand = mod_sym(cand * lifted[i], mod);
      cand = primitive_part(cand);
      if (cand.degree() <= 0) continue;
      auto [q, r] = divmod(to_rat(g), to_rat(cand));
      if (!r.is_zero()) continue;
      bool integral = true;
      for (const auto& c : q.coeffs()) integral = integral && denom(c) == 1;
      if (!integral) continue;
      result.push_back(cand);
      g = primitive_part(q);
      std::vector<IntPoly> rest;
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (!pick[i]) rest.push_back(lifted[i]);
      lifted = std::move(rest);
      found = true;
      break;
    } while (std::next_permutation(pick.begin(), pick.end()));
    if (!found) ++s;
  }
  if (g.degree() > 0) result.push_back(g);
  return result;
}

}  // namespace detail

/// Factorization over the integers: content times irreducible primitive
/// factors with multiplicities. Degree capped at kMaxFactorDegree.
inline Factorization factor_integer_poly(const IntPoly& p) {
  Factorization out;
  if (p.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
  if (p.degree() > kMaxFactorDegree) throw BudgetError("degree too large");
  out.content = content(p);
  if (p.lc() < 0) out.content = -out.content;
  if (p.degree() == 0) return out;
  for (const auto& [g0, mult] : squarefree_decomposition(p)) {
    IntPoly g = g0;
    for (auto& lin : detail::strip_rational_roots(g)) out.factors.emplace_back(primitive_part(lin), mult);
    if (g.degree() > 0)
      for (auto& h : detail::zassenhaus(g)) out.factors.emplace_back(primitive_part(h), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return a.first < b.first;
  });
  // merge equal factors coming from different squarefree layers (cannot happen
  // for a correct decomposition, but keeps the output canonical)
  std::vector<std::pair<IntPoly, int>> merged;
  for (auto& f : out.factors) {
    if (!merged.empty() && merged.back().first == f.first)
      merged.back().second += f.second;
    else
      merged.push_back(f);
  }
  out.factors = std::move(merged);
  return out;
}

inline IntPoly expand(const Factorization& f) {
  IntPoly r = IntPoly::constant(f.content);
  for (const auto& [g, e] : f.factors)
    for (int i = 0; i < e; ++i) r = r * g;
  return r;
}

}  // namespace knotwork
