#pragma once

#include <utility>
#include <vector>

#include "knotwork/algebra/poly.hpp"

namespace knotwork {

/// Closed rational interval [lo, hi] isolating one real root. Endpoints are
/// never roots, so the root lies strictly inside.
struct IsolatingInterval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
};

/// Sturm chain of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& squarefree) {
    if (squarefree.is_zero()) throw PreconditionError("indeterminate roots");
    chain_.push_back(squarefree);
    if (squarefree.degree() == 0) return;
    IntPoly d = primitive_part(squarefree.derivative());
    chain_.push_back(squarefree.lc() < 0 ? IntPoly(-d) : d);
    while (chain_.back().degree() > 0) {
      RatPoly r = divmod(to_rat(chain_[chain_.size() - 2]), to_rat(chain_.back())).second;
      if (r.is_zero()) break;
      // primitive_part makes the leading coefficient positive; keep the sign of -r.
      IntPoly next = primitive_part(r);
      if (r.lc() > 0) next = -next;
      chain_.push_back(next);
    }
  }

  const IntPoly& poly() const { return chain_.front(); }

  int variations(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& p : chain_) {
      int s = sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  /// Distinct roots in (lo, hi) when neither endpoint is a root.
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

 private:
  std::vector<IntPoly> chain_;
};

/// Cauchy bound: every real root has |x| < bound.
inline Rational root_bound(const IntPoly& p) {
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = Rational(abs_int(p.coeff(k))) / Rational(abs_int(p.lc()));
    if (r > m) m = r;
  }
  return Rational(ceil_rat(m) + 2);
}

namespace detail {

// Replaces an exact rational root m by a small interval around it holding no
// other root. `lo`, `hi` bound the region.
inline IsolatingInterval pad_exact_root(const SturmSequence& s, const Rational& m,
                                        const Rational& lo, const Rational& hi) {
  Rational d = (hi - lo) / 4;
  while (sign_at(s.poly(), m - d) == 0 || sign_at(s.poly(), m + d) == 0 || s.count(m - d, m + d) != 1)
    d /= 2;
  return {m - d, m + d};
}

}  // namespace detail

/// Bisects an isolating interval of a squarefree polynomial once.
inline IsolatingInterval refine(const IntPoly& squarefree, const IsolatingInterval& iv) {
  Rational m = (iv.lo + iv.hi) / 2;
  int sm = sign_at(squarefree, m);
  if (sm == 0) {
    Rational d = iv.width() / 4;
    while (sign_at(squarefree, m - d) == 0 || sign_at(squarefree, m + d) == 0) d /= 2;
    return {m - d, m + d};
  }
  if (sign_at(squarefree, iv.lo) * sm < 0) return {iv.lo, m};
  return {m, iv.hi};
}

inline IsolatingInterval refine_to(const IntPoly& squarefree, IsolatingInterval iv, const Rational& width) {
  while (iv.width() > width) iv = refine(squarefree, iv);
  return iv;
}

/// All real roots of a squarefree polynomial, sorted, with disjoint intervals.
inline std::vector<IsolatingInterval> isolate_all(const SturmSequence& s) {
  std::vector<IsolatingInterval> out;
  if (s.poly().degree() <= 0) return out;
  Rational b = root_bound(s.poly());
  std::vector<IsolatingInterval> todo{{-b, b}};
  while (!todo.empty()) {
    IsolatingInterval iv = todo.back();
    todo.pop_back();
    int n = s.count(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    Rational m = (iv.lo + iv.hi) / 2;
    if (sign_at(s.poly(), m) == 0) {
      IsolatingInterval pad = detail::pad_exact_root(s, m, iv.lo, iv.hi);
      out.push_back(pad);
      todo.push_back({iv.lo, pad.lo});
      todo.push_back({pad.hi, iv.hi});
    } else {
      todo.push_back({iv.lo, m});
      todo.push_back({m, iv.hi});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

/// Isolating intervals for the distinct real roots of p in the open interval
/// (a, b). Each returned interval lies inside [a, b].
inline std::vector<IsolatingInterval> sturm_isolate(const IntPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw PreconditionError("indeterminate roots");
  IntPoly sf = squarefree_part(p);
  SturmSequence s(sf);
  std::vector<IsolatingInterval> out;
  bool a_root = sign_at(sf, a) == 0, b_root = sign_at(sf, b) == 0;
  for (IsolatingInterval iv : isolate_all(s)) {
    if ((a_root && iv.lo < a && a < iv.hi) || (b_root && iv.lo < b && b < iv.hi)) continue;
    while (true) {
      if (iv.hi <= a || iv.lo >= b) break;
      if (iv.lo >= a && iv.hi <= b) {
        out.push_back(iv);
        break;
      }
      iv = refine(sf, iv);
    }
  }
  return out;
}

/// Number of distinct real roots of p in (a, b).
inline int count_roots(const IntPoly& p, const Rational& a, const Rational& b) {
  return static_cast<int>(sturm_isolate(p, a, b).size());
}

}  // namespace knotwork
