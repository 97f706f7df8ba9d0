#pragma once

#include <string>

#include "knotwork/algebra/interval.hpp"
#include "knotwork/algebra/sturm.hpp"

namespace knotwork {

/// A point exp(2*pi*i*theta) on the unit circle, theta in (0, 1), with
/// x = 2cos(2*pi*theta) a root of an irreducible integer polynomial. The root
/// is pinned by an isolating interval inside (-2, 2); `upper` selects the
/// conjugate with theta in (1/2, 1).
class AlgebraicAngle {
 public:
  AlgebraicAngle(IntPoly minimal_poly, IsolatingInterval x, bool upper)
      : poly_(std::move(minimal_poly)), x_(std::move(x)), upper_(upper) {
    SturmSequence s(poly_);
    root_index_ = s.count(Rational(-2), x_.lo);
  }

  const IntPoly& minimal_poly() const { return poly_; }
  const IsolatingInterval& x_interval() const { return x_; }
  bool upper() const { return upper_; }
  /// Index of the root among the real roots of the minimal polynomial in (-2, 2).
  int root_index() const { return root_index_; }

  AlgebraicAngle conjugate() const {
    AlgebraicAngle c = *this;
    c.upper_ = !upper_;
    return c;
  }

  void refine_to(const Rational& width) { x_ = knotwork::refine_to(poly_, x_, width); }

  /// Enclosure of theta.
  IntervalReal theta(unsigned bits) const {
    IntervalReal y(x_.lo / 2, x_.hi / 2);
    IntervalReal two_pi = enclose::pi(bits + 4) * IntervalReal(2);
    IntervalReal lower = (enclose::arccos(y, bits + 4) / two_pi).rounded(bits + 2);
    return upper_ ? (IntervalReal(1) - lower) : lower;
  }

  /// Enclosure of theta with width at most `width` (refines the root as needed).
  IntervalReal theta_within(const Rational& width) {
    unsigned bits = bits_for(width) + 8;
    while (true) {
      IntervalReal t = theta(bits);
      if (t.width() <= width) return t;
      refine_to(x_.width() / 16);
      bits += 8;
    }
  }

  friend bool operator==(const AlgebraicAngle& a, const AlgebraicAngle& b) {
    return a.upper_ == b.upper_ && a.root_index_ == b.root_index_ && a.poly_ == b.poly_;
  }

  /// theta rounded to `digits` decimals (nearest, from a much tighter enclosure).
  std::string describe(int digits = 12) const {
    AlgebraicAngle tmp = *this;
    Integer scale = pow(Integer(10), digits);
    IntervalReal t = tmp.theta_within(Rational(1, scale * 10000));
    return to_decimal(t.mid() + Rational(1, 2 * scale), digits, true);
  }

 private:
  static Integer pow(Integer b, int e) {
    Integer r = 1;
    while (e-- > 0) r *= b;
    return r;
  }

  IntPoly poly_;
  IsolatingInterval x_;
  bool upper_ = false;
  int root_index_ = 0;
};

}  // namespace knotwork
