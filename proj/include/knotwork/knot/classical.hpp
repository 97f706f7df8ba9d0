#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "knotwork/algebra/algebraic_angle.hpp"
#include "knotwork/algebra/factor.hpp"
#include "knotwork/algebra/hermitian.hpp"
#include "knotwork/knot/seifert.hpp"

namespace knotwork {

// ---------------------------------------------------------------------------
// Alexander polynomial and its numerical shadows

/// det(V - t V^T) as an ordinary polynomial in t, by evaluation at
/// t = 0..2g and Newton interpolation.
inline IntPoly alexander_raw(const SeifertMatrix& v) {
  std::size_t n = v.size();
  if (n == 0) return IntPoly{1};
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    IntegerMatrix m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = Integer(v(i, j)) - Integer(static_cast<long>(k)) * v(j, i);
    xs.emplace_back(static_cast<long>(k));
    ys.emplace_back(determinant(std::move(m)));
  }
  // divided differences
  std::vector<Rational> dd = ys;
  for (std::size_t lvl = 1; lvl <= n; ++lvl)
    for (std::size_t i = n; i >= lvl; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
      if (i == lvl) break;
    }
  RatPoly p = RatPoly::constant(dd[n]);
  for (std::size_t i = n; i-- > 0;) p = p * RatPoly{-xs[i], Rational(1)} + RatPoly::constant(dd[i]);
  std::vector<Integer> c;
  for (const auto& a : p.coeffs()) c.push_back(numer(a));
  return IntPoly(std::move(c));
}

/// Alexander polynomial normalized so that Delta(t) = Delta(1/t) and Delta(1) = 1.
inline LaurentPoly alexander_polynomial(const SeifertMatrix& v) {
  IntPoly raw = alexander_raw(v);
  LaurentPoly l = LaurentPoly::from_poly(raw);
  if (l.is_zero()) throw PreconditionError("Alexander polynomial vanishes (not a knot Seifert matrix)");
  int shift = -(l.min_exp() + l.max_exp()) / 2;
  std::map<int, Integer> m;
  for (const auto& [k, a] : l.terms()) m[k + shift] = a;
  LaurentPoly sym(std::move(m));
  if (sym.eval(1) < 0) {
    std::map<int, Integer> neg;
    for (const auto& [k, a] : sym.terms()) neg[k] = -a;
    sym = LaurentPoly(std::move(neg));
  }
  return sym;
}

inline int d0(const SeifertMatrix& v) { return alexander_polynomial(v).span(); }

inline Integer determinant(const SeifertMatrix& v) { return abs_int(alexander_polynomial(v).eval(-1)); }

/// Rewrites a symmetric Laurent polynomial sum c_k (t^k + t^-k) in x = t + 1/t.
inline IntPoly chebyshev_rewrite(const LaurentPoly& sym) {
  int m = sym.is_zero() ? 0 : sym.max_exp();
  // Dickson polynomials D_k with t^k + t^-k = D_k(t + 1/t)
  std::vector<IntPoly> dk{IntPoly{2}, IntPoly{0, 1}};
  for (int k = 2; k <= m; ++k) dk.push_back(IntPoly{0, 1} * dk[k - 1] - dk[k - 2]);
  IntPoly p = IntPoly::constant(sym.coeff(0));
  for (int k = 1; k <= m; ++k) p = p + IntPoly::constant(sym.coeff(k)) * dk[k];
  return p;
}

// ---------------------------------------------------------------------------
// Arf invariant

/// Arf invariant of q(x) = x.Vx mod 2 over a symplectic basis of V - V^T mod 2.
inline int arf(const SeifertMatrix& v) {
  std::size_t n = v.size();
  auto form = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += a[i] * (v(i, j) - v(j, i)) * b[j];
    return static_cast<int>(((s % 2) + 2) % 2);
  };
  auto quad = [&](const std::vector<int>& a) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += a[i] * v(i, j) * a[j];
    return static_cast<int>(((s % 2) + 2) % 2);
  };
  std::vector<std::vector<int>> pool;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    pool.push_back(e);
  }
  int total = 0;
  while (!pool.empty()) {
    std::vector<int> a = pool.back();
    pool.pop_back();
    auto it = std::find_if(pool.begin(), pool.end(), [&](const auto& b) { return form(a, b) == 1; });
    if (it == pool.end()) {
      // a is in the radical mod 2; impossible for unimodular V - V^T unless a = 0
      if (std::any_of(a.begin(), a.end(), [](int x) { return x != 0; }))
        throw PreconditionError("intersection form degenerate mod 2");
      continue;
    }
    std::vector<int> b = *it;
    pool.erase(it);
    total ^= quad(a) & quad(b);
    for (auto& w : pool) {
      int wb = form(w, b), wa = form(w, a);
      for (std::size_t i = 0; i < n; ++i) w[i] = (w[i] + wb * a[i] + wa * b[i]) % 2;
    }
  }
  return total;
}

/// Arf from the determinant: 0 iff |Delta(-1)| = +-1 mod 8.
inline int arf_from_determinant(const SeifertMatrix& v) {
  Integer d = determinant(v) % 8;
  return (d == 1 || d == 7) ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Levine-Tristram signatures

namespace detail {

inline IntPoly cyclotomic(int q) {
  IntPoly p = IntPoly::monomial(Integer(1), q) - IntPoly{1};
  for (int d = 1; d < q; ++d)
    if (q % d == 0) p = exact_div(p, cyclotomic(d));
  return p;
}

inline int euler_phi(int q) {
  int r = q;
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      r -= r / p;
    }
  if (q > 1) r -= r / q;
  return r;
}

}  // namespace detail

/// True iff exp(2 pi i theta) is a root of Delta, for rational theta.
inline bool is_alexander_root(const LaurentPoly& delta, const Rational& theta) {
  Integer qd = denom(theta);
  IntPoly p = delta.to_poly();
  if (qd > Integer(4 * (p.degree() + 1) * (p.degree() + 1))) return false;
  int q = static_cast<int>(qd);
  if (detail::euler_phi(q) > p.degree()) return false;
  return divmod(to_rat(p), to_rat(detail::cyclotomic(q))).second.is_zero();
}

/// Hermitian matrix (1 - w) V + (1 - conj w) V^T at w = exp(2 pi i theta).
inline HermitianIntervalMatrix tristram_matrix(const SeifertMatrix& v, const Rational& theta, unsigned bits) {
  IntervalReal c, s;
  enclose::cos_sin_turns(theta, bits, c, s);
  IntervalReal one_minus_c = IntervalReal(1) - c;
  std::size_t n = v.size();
  HermitianIntervalMatrix h{IntervalMatrix(n, std::vector<IntervalReal>(n)),
                            IntervalMatrix(n, std::vector<IntervalReal>(n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      h.re[i][j] = (one_minus_c * IntervalReal(static_cast<long>(v(i, j) + v(j, i)))).rounded(bits);
      h.im[i][j] = (s * IntervalReal(static_cast<long>(v(j, i) - v(i, j)))).rounded(bits);
    }
  return h;
}

/// Levine-Tristram signature at w = exp(2 pi i theta), theta rational in (0, 1).
inline int levine_tristram(const SeifertMatrix& v, const Rational& theta, SignatureOptions opt = {}) {
  if (theta <= 0 || theta >= 1) throw PreconditionError("theta must lie in (0, 1)");
  if (v.size() == 0) return 0;
  if (is_alexander_root(alexander_polynomial(v), theta))
    throw SingularError("possibly singular: omega is a root of the Alexander polynomial");
  return hermitian_signature([&](unsigned bits) { return tristram_matrix(v, theta, bits); }, opt);
}

/// Step function theta -> sigma_omega on the circle. `jumps` are sorted in
/// (0, 1); `values[k]` is the value on the open arc before `jumps[k]`, and
/// values.back() the value on the last arc (which wraps round to theta = 0).
struct SignatureStepFunction {
  std::vector<AlgebraicAngle> jumps;
  std::vector<int> values;

  bool identically_zero() const {
    return std::all_of(values.begin(), values.end(), [](int x) { return x == 0; });
  }
};

namespace detail {

// Rational strictly between two enclosures that are already disjoint.
inline Rational between(const IntervalReal& a, const IntervalReal& b) { return (a.hi() + b.lo()) / 2; }

}  // namespace detail

/// Unit-circle roots of Delta as algebraic angles in the lower half (0, 1/2),
/// sorted by increasing theta.
inline std::vector<AlgebraicAngle> lower_jump_angles(const LaurentPoly& delta) {
  IntPoly p = chebyshev_rewrite(delta);
  std::vector<AlgebraicAngle> out;
  if (p.degree() <= 0) return out;
  auto roots = sturm_isolate(p, Rational(-2), Rational(2));
  if (roots.empty()) return out;
  Factorization fac = factor_integer_poly(p);
  for (const auto& iv : roots) {
    const IntPoly* owner = nullptr;
    for (const auto& [f, e] : fac.factors)
      if (sign_at(f, iv.lo) * sign_at(f, iv.hi) < 0) owner = &f;
    if (owner == nullptr) throw PreconditionError("root interval lost its minimal polynomial");
    out.emplace_back(*owner, iv, false);
  }
  // theta = arccos(x/2)/2pi decreases in x
  std::reverse(out.begin(), out.end());
  return out;
}

/// The Levine-Tristram signature function with exact jump locations.
inline SignatureStepFunction signature_function(const SeifertMatrix& v) {
  SignatureStepFunction sf;
  if (v.size() == 0) {
    sf.values = {0};
    return sf;
  }
  std::vector<AlgebraicAngle> lower = lower_jump_angles(alexander_polynomial(v));
  // sample one rational theta inside each arc of (0, 1/2]
  std::vector<Rational> samples;
  unsigned bits = 40;
  while (true) {
    std::vector<IntervalReal> enc;
    for (const auto& a : lower) enc.push_back(a.theta(bits));
    bool separated = true;
    for (std::size_t k = 0; k < enc.size(); ++k) {
      if (enc[k].lo() <= 0 || enc[k].hi() >= Rational(1, 2)) separated = false;
      if (k + 1 < enc.size() && !(enc[k].hi() < enc[k + 1].lo())) separated = false;
    }
    if (separated) {
      samples.clear();
      for (std::size_t k = 0; k < enc.size(); ++k)
        samples.push_back(k == 0 ? enc[0].lo() / 2 : detail::between(enc[k - 1], enc[k]));
      samples.push_back(Rational(1, 2));
      break;
    }
    for (auto& a : lower) a.refine_to(a.x_interval().width() / 16);
    bits += 16;
  }
  std::vector<int> lower_values;
  for (const auto& th : samples) lower_values.push_back(levine_tristram(v, th));
  sf.jumps = lower;
  for (auto it = lower.rbegin(); it != lower.rend(); ++it) sf.jumps.push_back(it->conjugate());
  sf.values = lower_values;
  for (std::size_t k = lower_values.size() - 1; k-- > 0;) sf.values.push_back(lower_values[k]);
  return sf;
}

/// Rational sample points, `per_arc` of them strictly inside every arc.
inline std::vector<std::vector<Rational>> arc_samples(const SignatureStepFunction& sf, int per_arc) {
  std::vector<IntervalReal> enc;
  for (auto a : sf.jumps) enc.push_back(a.theta_within(Rational(1, 1 << 20)));
  std::vector<std::vector<Rational>> out;
  for (std::size_t k = 0; k <= enc.size(); ++k) {
    Rational lo = k == 0 ? Rational(0) : enc[k - 1].hi();
    Rational hi = k == enc.size() ? Rational(1) : enc[k].lo();
    std::vector<Rational> pts;
    for (int i = 1; i <= per_arc; ++i) pts.push_back(lo + (hi - lo) * Rational(i, per_arc + 1));
    out.push_back(pts);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Obstructions

struct ObstructionResult {
  bool passes = true;
  std::string reason;
};

/// Necessary conditions for fiberedness: Delta monic, and d0 = 2 * genus
/// when a genus is claimed.
inline ObstructionResult fibered_obstruction(const SeifertMatrix& v, std::optional<int> claimed_genus = {}) {
  LaurentPoly delta = alexander_polynomial(v);
  Integer lead = abs_int(delta.coeff(delta.max_exp()));
  if (lead != 1) return {false, "not monic"};
  if (claimed_genus && delta.span() != 2 * *claimed_genus)
    return {false, "d0 = " + std::to_string(delta.span()) + " != 2*genus = " + std::to_string(2 * *claimed_genus)};
  return {};
}

/// t^deg f(1/t), primitive with positive leading coefficient.
inline IntPoly reciprocal(const IntPoly& f) {
  std::vector<Integer> c(f.coeffs().rbegin(), f.coeffs().rend());
  return primitive_part(IntPoly(std::move(c)));
}

/// Fox-Milnor condition: Delta = +-t^k f(t) f(1/t) for an integer polynomial f.
inline bool fox_milnor_test(const LaurentPoly& delta) {
  IntPoly p = delta.to_poly();
  if (p.degree() > kMaxFactorDegree) throw BudgetError("degree too large");
  if (p.degree() <= 0) return abs_int(p.coeff(0)) == 1;
  Factorization fac = factor_integer_poly(p);
  if (abs_int(fac.content) != 1) return false;
  for (const auto& [f, e] : fac.factors) {
    IntPoly r = reciprocal(f);
    if (r == f) {
      if (e % 2 != 0) return false;
      continue;
    }
    auto mate = std::find_if(fac.factors.begin(), fac.factors.end(), [&](const auto& x) { return x.first == r; });
    if (mate == fac.factors.end() || mate->second != e) return false;
  }
  return true;
}

struct ConcordanceComparison {
  std::vector<std::string> distinguished_by;
  bool indistinguishable() const { return distinguished_by.empty(); }
};

/// Compares computable algebraic-concordance invariants of two knots: the
/// signature functions (via the signature function of V1 # -V2, which must
/// vanish on every arc), the Arf invariants, and the Fox-Milnor condition for
/// Delta1 * Delta2. A semi-decision: agreement proves nothing.
inline ConcordanceComparison algebraically_concordant_test(const SeifertMatrix& a, const SeifertMatrix& b) {
  ConcordanceComparison out;
  SeifertMatrix diff = connected_sum(a, mirror(b));
  if (!signature_function(diff).identically_zero()) out.distinguished_by.push_back("signature_function");
  if (arf(a) != arf(b)) out.distinguished_by.push_back("arf");
  if (!fox_milnor_test(alexander_polynomial(a) * alexander_polynomial(b))) out.distinguished_by.push_back("fox_milnor");
  return out;
}

}  // namespace knotwork
