#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knotwork/algebra/numeric.hpp"

namespace knotwork {

/// Dense univariate polynomial, coefficients stored low degree first.
/// Trailing zeros are always trimmed; the zero polynomial has no coefficients.
template <typename T>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  static Poly constant(T a) { return Poly(std::vector<T>{std::move(a)}); }
  static Poly monomial(T a, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = std::move(a);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const T& lc() const { return c_.back(); }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const std::vector<T>& coeffs() const { return c_; }

  template <typename U>
  U eval(const U& x) const {
    U r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + U(*it);
    return r;
  }

  Poly derivative() const {
    std::vector<T> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * T(static_cast<long>(k)));
    return Poly(std::move(d));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const T& s, const Poly& p) { return Poly::constant(s) * p; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      const T& a = c_[k];
      if (a == 0) continue;
      bool neg = a < 0;
      T m = neg ? T(-a) : a;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      bool unit = (m == 1);
      if (!unit || k == 0) s += to_string(m);
      if (k > 0) {
        if (!unit) s += "*";
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

inline RatPoly to_rat(const IntPoly& p) {
  std::vector<Rational> c;
  for (const auto& a : p.coeffs()) c.emplace_back(a);
  return RatPoly(std::move(c));
}

inline Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& a : p.coeffs()) g = gcd_int(g, a);
  return g;
}

/// Primitive part with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.lc() < 0) g = -g;
  std::vector<Integer> c;
  for (const auto& a : p.coeffs()) c.push_back(a / g);
  return IntPoly(std::move(c));
}

/// Clears denominators and returns the primitive integer multiple with
/// positive leading coefficient.
inline IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  Integer l = 1;
  for (const auto& a : p.coeffs()) l = l / gcd_int(l, denom(a)) * denom(a);
  std::vector<Integer> c;
  for (const auto& a : p.coeffs()) c.push_back(numer(a * l));
  return primitive_part(IntPoly(std::move(c)));
}

/// Division with remainder over the rationals.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  std::vector<Rational> q(a.degree() - db + 1, Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Rational f = r[k] / b.lc();
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

/// Exact division of integer polynomials; throws if b does not divide a.
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = divmod(to_rat(a), to_rat(b));
  if (!r.is_zero()) throw PreconditionError("polynomial does not divide exactly");
  std::vector<Integer> c;
  for (const auto& x : q.coeffs()) {
    if (denom(x) != 1) throw PreconditionError("polynomial quotient is not integral");
    c.push_back(numer(x));
  }
  return IntPoly(std::move(c));
}

/// Primitive gcd over Q[x], returned as a primitive integer polynomial.
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  RatPoly x = to_rat(a), y = to_rat(b);
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = to_rat(primitive_part(r));
  }
  return primitive_part(x);
}

inline IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return primitive_part(p);
  return primitive_part(exact_div(primitive_part(p), gcd(p, p.derivative())));
}

/// Yun's squarefree decomposition of a primitive polynomial:
/// p = prod_i f_i^i, returned as (f_i, i) with deg f_i > 0.
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly f = primitive_part(p);
  if (f.degree() <= 0) return out;
  IntPoly a = gcd(f, f.derivative());
  IntPoly b = exact_div(f, a);
  int i = 1;
  while (b.degree() > 0) {
    IntPoly g = gcd(a, b);
    IntPoly s = primitive_part(exact_div(b, g));
    if (s.degree() > 0) out.emplace_back(s, i);
    a = exact_div(a, g);
    b = g;
    ++i;
  }
  return out;
}

/// Sign of p at a rational point.
inline int sign_at(const IntPoly& p, const Rational& x) { return sign_of(p.eval(x)); }

/// Laurent polynomial with integer coefficients; map from exponent to
/// nonzero coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<int, Integer> terms) : terms_(std::move(terms)) { trim(); }
  static LaurentPoly one() { return LaurentPoly({{0, Integer(1)}}); }
  /// Interprets an ordinary polynomial, shifted by t^shift.
  static LaurentPoly from_poly(const IntPoly& p, int shift = 0) {
    std::map<int, Integer> m;
    for (int k = 0; k <= p.degree(); ++k)
      if (p.coeff(k) != 0) m[k + shift] = p.coeff(k);
    return LaurentPoly(std::move(m));
  }

  const std::map<int, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exp() const { return terms_.begin()->first; }
  int max_exp() const { return terms_.rbegin()->first; }
  int span() const { return is_zero() ? 0 : max_exp() - min_exp(); }
  Integer coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  Integer eval(const Integer& t) const {
    // only used at t = ±1 and small integers; negative powers must divide
    Rational r = 0;
    for (const auto& [k, a] : terms_) {
      Rational p = 1;
      for (int i = 0; i < (k < 0 ? -k : k); ++i) p *= Rational(t);
      r += Rational(a) * (k < 0 ? Rational(1) / p : p);
    }
    return numer(r);
  }

  /// Multiplies by t^-min so the lowest exponent becomes zero.
  IntPoly to_poly() const {
    if (is_zero()) return {};
    std::vector<Integer> c(span() + 1, Integer(0));
    for (const auto& [k, a] : terms_) c[k - min_exp()] = a;
    return IntPoly(std::move(c));
  }

  /// t -> t^-1.
  LaurentPoly reciprocal() const {
    std::map<int, Integer> m;
    for (const auto& [k, a] : terms_) m[-k] = a;
    return LaurentPoly(std::move(m));
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<int, Integer> m;
    for (const auto& [i, x] : a.terms_)
      for (const auto& [j, y] : b.terms_) m[i + j] += x * y;
    return LaurentPoly(std::move(m));
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, a] = *it;
      bool neg = a < 0;
      Integer m = neg ? Integer(-a) : a;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      if (m != 1 || k == 0) s += m.str();
      if (k != 0) {
        if (m != 1) s += "*";
        s += var;
        if (k != 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void trim() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
  std::map<int, Integer> terms_;
};

}  // namespace knotwork
