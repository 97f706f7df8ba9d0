#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "knotwork/algebra/interval.hpp"

namespace knotwork {

using IntervalMatrix = std::vector<std::vector<IntervalReal>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Hermitian matrix H = re + i*im with re symmetric and im antisymmetric.
struct HermitianIntervalMatrix {
  IntervalMatrix re, im;
};

struct SignatureOptions {
  unsigned initial_bits = 64;
  unsigned max_bits = 8192;
};

namespace detail {

// Closed interval [lo, hi] * 2^-bits with integer endpoints. Products and
// quotients round outward to the same scale, so no gcds are ever taken.
struct FixedInterval {
  Integer lo, hi;
};

inline Integer shift_floor(const Integer& x, unsigned bits) {
  return x >= 0 ? Integer(x >> bits) : Integer(-((-x + pow2(bits) - 1) >> bits));
}
inline Integer shift_ceil(const Integer& x, unsigned bits) { return -shift_floor(-x, bits); }

// Arithmetic policies for the elimination below: exact rationals, or
// fixed-point dyadic intervals at a given scale.
struct ExactArith {
  using Num = Rational;
  bool positive(const Num& x) const { return x > 0; }
  bool negative(const Num& x) const { return x < 0; }
  Rational magnitude(const Num& x) const { return x < 0 ? Rational(-x) : x; }
  Num add(const Num& a, const Num& b) const { return a + b; }
  Num sub(const Num& a, const Num& b) const { return a - b; }
  Num neg(const Num& a) const { return -a; }
  Num mul(const Num& a, const Num& b) const { return a * b; }
  Num inv(const Num& a) const { return Rational(1) / a; }
};

struct FixedArith {
  using Num = FixedInterval;
  unsigned bits;
  bool positive(const Num& x) const { return x.lo > 0; }
  bool negative(const Num& x) const { return x.hi < 0; }
  Integer magnitude(const Num& x) const { return x.lo > 0 ? x.lo : Integer(-x.hi); }
  Num add(const Num& a, const Num& b) const { return {a.lo + b.lo, a.hi + b.hi}; }
  Num sub(const Num& a, const Num& b) const { return {a.lo - b.hi, a.hi - b.lo}; }
  Num neg(const Num& a) const { return {-a.hi, -a.lo}; }
  Num mul(const Num& a, const Num& b) const {
    Integer p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {shift_floor(*std::min_element(p, p + 4), bits), shift_ceil(*std::max_element(p, p + 4), bits)};
  }
  // caller guarantees 0 is excluded
  Num inv(const Num& a) const {
    Integer s2 = pow2(2 * bits);
    return {floor_div(s2, a.hi), -floor_div(-s2, a.lo)};
  }
};

// Symmetric LDL^T with 1x1 pivots of certified sign, falling back to an
// indefinite 2x2 block. Returns nullopt when neither can be certified.
template <typename Arith>
std::optional<int> eliminate(std::vector<std::vector<typename Arith::Num>> m, const Arith& ar) {
  using Num = typename Arith::Num;
  int sig = 0;
  while (!m.empty()) {
    std::size_t n = m.size();
    std::optional<std::size_t> piv;
    for (std::size_t i = 0; i < n; ++i) {
      const Num& d = m[i][i];
      if (!ar.positive(d) && !ar.negative(d)) continue;
      if (!piv || ar.magnitude(d) > ar.magnitude(m[*piv][*piv])) piv = i;
    }
    std::vector<std::vector<Num>> next;
    if (piv) {
      std::size_t p = *piv;
      sig += ar.positive(m[p][p]) ? 1 : -1;
      Num inv = ar.inv(m[p][p]);
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < n; ++i)
        if (i != p) keep.push_back(i);
      std::vector<Num> scaled;  // m[r][p] / m[p][p]
      for (std::size_t r : keep) scaled.push_back(ar.mul(m[r][p], inv));
      next.assign(keep.size(), std::vector<Num>(keep.size()));
      for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a; b < keep.size(); ++b)
          next[a][b] = next[b][a] = ar.sub(m[keep[a]][keep[b]], ar.mul(scaled[a], m[p][keep[b]]));
      m = std::move(next);
      continue;
    }
    // det < 0 certifies one positive and one negative direction
    std::optional<std::pair<std::size_t, std::size_t>> block;
    Num det{};
    for (std::size_t i = 0; i < n && !block; ++i)
      for (std::size_t j = i + 1; j < n && !block; ++j) {
        Num d = ar.sub(ar.mul(m[i][i], m[j][j]), ar.mul(m[i][j], m[i][j]));
        if (ar.negative(d)) {
          block = {i, j};
          det = d;
        }
      }
    if (!block) return std::nullopt;
    auto [i, j] = *block;
    Num inv_det = ar.inv(det);
    // B^{-1} = inv_det * [[c, -b], [-b, a]]
    Num ia = ar.mul(m[j][j], inv_det), ib = ar.neg(ar.mul(m[i][j], inv_det)), ic = ar.mul(m[i][i], inv_det);
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < n; ++k)
      if (k != i && k != j) keep.push_back(k);
    // row r of M_{rB} B^{-1}
    std::vector<std::pair<Num, Num>> scaled;
    for (std::size_t r : keep)
      scaled.emplace_back(ar.add(ar.mul(m[r][i], ia), ar.mul(m[r][j], ib)),
                          ar.add(ar.mul(m[r][i], ib), ar.mul(m[r][j], ic)));
    next.assign(keep.size(), std::vector<Num>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = a; b < keep.size(); ++b) {
        Num corr = ar.add(ar.mul(scaled[a].first, m[i][keep[b]]), ar.mul(scaled[a].second, m[j][keep[b]]));
        next[a][b] = next[b][a] = ar.sub(m[keep[a]][keep[b]], corr);
      }
    m = std::move(next);
  }
  return sig;
}

}  // namespace detail

/// Signature of a real symmetric interval matrix, or nullopt when no pivot
/// can be certified at `bits` of working precision. A matrix of point
/// entries is treated exactly and throws SingularError when singular.
inline std::optional<int> try_symmetric_signature(const IntervalMatrix& m, unsigned bits) {
  bool exact = true;
  for (const auto& row : m)
    for (const auto& x : row) exact = exact && x.is_point();
  if (exact) {
    RationalMatrix q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (const auto& x : m[i]) q[i].push_back(x.lo());
    auto s = detail::eliminate(std::move(q), detail::ExactArith{});
    if (!s) throw SingularError("possibly singular");
    return s;
  }
  Integer scale = pow2(bits);
  std::vector<std::vector<detail::FixedInterval>> f(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) f[i].push_back({floor_rat(x.lo() * scale), ceil_rat(x.hi() * scale)});
  return detail::eliminate(std::move(f), detail::FixedArith{bits});
}

/// Signature of a real symmetric matrix whose entries are produced at a
/// requested precision by `build`. Precision doubles until every pivot is
/// certified; throws SingularError("possibly singular") past the budget.
inline int symmetric_signature(const std::function<IntervalMatrix(unsigned)>& build, SignatureOptions opt = {}) {
  for (unsigned bits = opt.initial_bits; bits <= opt.max_bits; bits *= 2)
    if (auto s = try_symmetric_signature(build(bits), bits)) return *s;
  throw SingularError("possibly singular");
}

/// Exact signature of a rational symmetric matrix.
inline int symmetric_signature(const RationalMatrix& a) {
  IntervalMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& x : a[i]) m[i].emplace_back(x);
  return *try_symmetric_signature(std::move(m), 0);
}

/// Real symmetric form [[re, -im], [im, re]] of a hermitian matrix; its
/// signature is twice the hermitian signature.
inline IntervalMatrix realify(const HermitianIntervalMatrix& h) {
  std::size_t n = h.re.size();
  IntervalMatrix m(2 * n, std::vector<IntervalReal>(2 * n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      m[r][c] = h.re[r][c];
      m[r + n][c + n] = h.re[r][c];
      m[r][c + n] = -h.im[r][c];
      m[r + n][c] = h.im[r][c];
    }
  return m;
}

/// Signature (#positive - #negative eigenvalues) of a hermitian matrix with
/// interval entries, refined through `build` until certified.
inline int hermitian_signature(const std::function<HermitianIntervalMatrix(unsigned)>& build,
                               SignatureOptions opt = {}) {
  return symmetric_signature([&](unsigned bits) { return realify(build(bits)); }, opt) / 2;
}

}  // namespace knotwork
