#pragma once

#include <algorithm>
#include <map>
#include <string>

#include "knotwork/algebra/numeric.hpp"

namespace knotwork {

/// Closed interval with rational endpoints enclosing a real number.
class IntervalReal {
 public:
  IntervalReal() = default;
  IntervalReal(const Rational& x) : lo_(x), hi_(x) {}  // NOLINT: point intervals convert implicitly
  IntervalReal(long x) : lo_(x), hi_(x) {}             // NOLINT
  IntervalReal(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw PreconditionError("interval with lo > hi");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool positive() const { return lo_ > 0; }
  bool negative() const { return hi_ < 0; }
  bool excludes_zero() const { return positive() || negative(); }
  bool intersects(const IntervalReal& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }

  /// Outward rounding of both endpoints to multiples of 2^-bits.
  IntervalReal rounded(unsigned bits) const { return {round_down(lo_, bits), round_up(hi_, bits)}; }

  IntervalReal widened(const Rational& r) const { return {lo_ - r, hi_ + r}; }

  friend IntervalReal operator+(const IntervalReal& a, const IntervalReal& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  friend IntervalReal operator-(const IntervalReal& a) { return {-a.hi_, -a.lo_}; }
  friend IntervalReal operator-(const IntervalReal& a, const IntervalReal& b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
  }
  friend IntervalReal operator*(const IntervalReal& a, const IntervalReal& b) {
    if (a.is_point() && b.is_point()) return IntervalReal(a.lo_ * b.lo_);
    Rational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
  }
  friend IntervalReal operator/(const IntervalReal& a, const IntervalReal& b) {
    if (!b.excludes_zero()) throw PreconditionError("interval division by an interval containing zero");
    IntervalReal inv(Rational(1) / b.hi_, Rational(1) / b.lo_);
    return a * inv;
  }
  IntervalReal& operator+=(const IntervalReal& o) { return *this = *this + o; }
  IntervalReal& operator-=(const IntervalReal& o) { return *this = *this - o; }
  IntervalReal& operator*=(const IntervalReal& o) { return *this = *this * o; }

  /// Convex hull.
  friend IntervalReal hull(const IntervalReal& a, const IntervalReal& b) {
    return {std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)};
  }

  std::string str(int digits = 12) const {
    return "[" + to_decimal(lo_, digits, true) + ", " + to_decimal(hi_, digits, false) + "]";
  }

 private:
  Rational lo_ = 0, hi_ = 0;
};

/// Certified enclosures of elementary functions. Every function takes a
/// working precision in bits and returns an interval of width O(2^-bits).
namespace enclose {

/// sqrt(q) for rational q >= 0.
inline IntervalReal sqrt(const Rational& q, unsigned bits) {
  if (q < 0) throw PreconditionError("sqrt of a negative number");
  Integer scaled = floor_rat(q * pow2(2 * bits));
  Integer s = boost::multiprecision::sqrt(scaled);
  return {Rational(s, pow2(bits)), Rational(s + 1, pow2(bits))};
}

namespace detail {

// atan(x) for rational 0 <= x <= 1 by Euler's series
//   atan x = sum_n  (2^{2n} (n!)^2 / (2n+1)!) x^{2n+1} / (1+x^2)^{n+1},
// whose terms are positive and decay at least by the factor y = x^2/(1+x^2) <= 1/2.
// Terms are integers scaled by 2^work, rounded outward.
inline IntervalReal atan_small(const Rational& x, unsigned bits) {
  if (x == 0) return IntervalReal(Rational(0));
  unsigned work = bits + 16;
  const Integer one = pow2(work);
  Rational y = x * x / (1 + x * x);
  Rational t0 = x / (1 + x * x);
  Integer ylo = floor_rat(y * one), yhi = ceil_rat(y * one);
  Integer term_lo = floor_rat(t0 * one), term_hi = ceil_rat(t0 * one);
  Integer sum_lo = 0, sum_hi = 0;
  for (long n = 0;; ++n) {
    sum_lo += term_lo;
    sum_hi += term_hi;
    term_lo = (term_lo * ylo >> work) * (2 * n + 2) / (2 * n + 3);
    Integer up = (term_hi * yhi + one - 1) >> work;
    term_hi = (up * (2 * n + 2) + (2 * n + 2)) / (2 * n + 3);
    // remaining tail <= next term * (1 + y + y^2 + ...) <= 2 * next term
    if (term_hi <= 1) return IntervalReal(Rational(sum_lo, one), Rational(sum_hi + 2 * term_hi + 2, one)).rounded(bits + 4);
  }
}

}  // namespace detail

inline IntervalReal pi(unsigned bits) {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239). Results are cached per
  // thread, and a cached enclosure at higher precision serves lower requests.
  thread_local std::map<unsigned, IntervalReal> cache;
  if (auto it = cache.lower_bound(bits); it != cache.end()) return it->second.rounded(bits + 2);
  IntervalReal a = detail::atan_small(Rational(1, 5), bits + 6);
  IntervalReal b = detail::atan_small(Rational(1, 239), bits + 6);
  IntervalReal r = (IntervalReal(16) * a - IntervalReal(4) * b).rounded(bits + 2);
  cache.emplace(bits, r);
  return r;
}

/// atan of a rational point.
inline IntervalReal atan(const Rational& x, unsigned bits) {
  if (x < 0) return -atan(-x, bits);
  if (x <= 1) return detail::atan_small(x, bits);
  IntervalReal half_pi = pi(bits + 2) * IntervalReal(Rational(1, 2));
  return (half_pi - detail::atan_small(1 / x, bits + 2)).rounded(bits + 2);
}

/// arccos of a rational point in [-1, 1].
inline IntervalReal arccos(const Rational& y, unsigned bits) {
  if (y < -1 || y > 1) throw PreconditionError("arccos argument outside [-1, 1]");
  if (y == 1) return IntervalReal(Rational(0));
  IntervalReal p = pi(bits + 4);
  if (y == -1) return p;
  if (y == 0) return p * IntervalReal(Rational(1, 2));
  // arccos y = pi/2 - atan(y / sqrt(1 - y^2)); atan is increasing, so the
  // enclosure of the argument maps endpoint-wise.
  unsigned work = bits + 8;
  IntervalReal root = sqrt(1 - y * y, work + 2 * bits_for(1 - y * y) + 8);
  IntervalReal z = (IntervalReal(y) / root).rounded(work);
  IntervalReal at(atan(z.lo(), work).lo(), atan(z.hi(), work).hi());
  return (p * IntervalReal(Rational(1, 2)) - at).rounded(bits + 2);
}

/// arccos over an interval argument within [-1, 1] (decreasing function).
inline IntervalReal arccos(const IntervalReal& y, unsigned bits) {
  return {arccos(y.hi(), bits).lo(), arccos(y.lo(), bits).hi()};
}

namespace detail {

// Taylor sums for sin and cos over an interval 0 <= x <= 8, carried out on
// integers scaled by 2^work with outward rounding. The remainder after the
// last term is bounded by the next term x^N/N!.
inline void sin_cos(const IntervalReal& x, unsigned bits, IntervalReal& s, IntervalReal& c) {
  if (x.lo() < 0 || x.hi() > 8) throw PreconditionError("sin/cos argument outside [0, 8]");
  unsigned work = bits + 16;
  const Integer one = pow2(work);
  const Integer xlo = floor_rat(x.lo() * one), xhi = ceil_rat(x.hi() * one);
  Integer plo = one, phi = one;  // enclosure of x^n / n!, all nonnegative
  Integer s_lo = 0, s_hi = 0, c_lo = 0, c_hi = 0;
  for (long n = 0;; ++n) {
    bool plus = (n / 2) % 2 == 0;
    Integer& lo = n % 2 == 0 ? c_lo : s_lo;
    Integer& hi = n % 2 == 0 ? c_hi : s_hi;
    if (plus) {
      lo += plo;
      hi += phi;
    } else {
      lo -= phi;
      hi -= plo;
    }
    plo = (plo * xlo >> work) / (n + 1);
    phi = -floor_div(-((phi * xhi + one - 1) >> work), Integer(n + 1));
    if (n > 16 && phi <= 1) {
      Rational err(phi + 1, one);
      s = IntervalReal(Rational(s_lo, one), Rational(s_hi, one)).widened(err).rounded(bits + 2);
      c = IntervalReal(Rational(c_lo, one), Rational(c_hi, one)).widened(err).rounded(bits + 2);
      return;
    }
  }
}

}  // namespace detail

/// Enclosures of cos(2*pi*theta) and sin(2*pi*theta) for rational theta in [0, 1].
inline void cos_sin_turns(const Rational& theta, unsigned bits, IntervalReal& c, IntervalReal& s) {
  if (theta < 0 || theta > 1) throw PreconditionError("angle outside [0, 1] turns");
  IntervalReal phi = (pi(bits + 8) * IntervalReal(2 * theta)).rounded(bits + 8);
  detail::sin_cos(phi, bits, s, c);
}

}  // namespace enclose

}  // namespace knotwork
