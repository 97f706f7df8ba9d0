#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "knotwork/error.hpp"

namespace knotwork {

// Expression templates off: values behave like plain arithmetic types.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd_int(Integer a, Integer b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline Integer floor_rat(const Rational& q) { return floor_div(numer(q), denom(q)); }

inline Integer ceil_rat(const Rational& q) { return -floor_div(-numer(q), denom(q)); }

inline Integer pow2(unsigned bits) { return Integer(1) << bits; }

inline int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }
inline int sign_of(const Integer& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

/// Largest dyadic k/2^bits that is <= q.
inline Rational round_down(const Rational& q, unsigned bits) {
  return Rational(floor_rat(q * pow2(bits)), pow2(bits));
}

/// Smallest dyadic k/2^bits that is >= q.
inline Rational round_up(const Rational& q, unsigned bits) {
  return Rational(ceil_rat(q * pow2(bits)), pow2(bits));
}

inline std::string to_string(const Integer& a) { return a.str(); }

inline std::string to_string(const Rational& q) {
  if (denom(q) == 1) return numer(q).str();
  return numer(q).str() + "/" + denom(q).str();
}

/// Decimal rendering with `digits` fractional digits. Rounds toward -inf when
/// `down`, toward +inf otherwise, so that a rendered enclosure stays sound.
inline std::string to_decimal(const Rational& q, int digits, bool down) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer v = down ? floor_rat(q * scale) : ceil_rat(q * scale);
  bool neg = v < 0;
  if (neg) v = -v;
  std::string s = v.str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (neg) s.insert(0, "-");
  return s;
}

/// Parses "3", "-2/7", "0.25", "1e-6", "2.5E3".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&]() -> Rational { throw ParseError("malformed number '" + s + "'"); };
  if (s.empty()) return fail();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    try {
      Integer n(s.substr(0, slash));
      Integer d(s.substr(slash + 1));
      if (d == 0) return fail();
      return Rational(n, d);
    } catch (const std::exception&) {
      return fail();
    }
  }
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  Integer mant = 0;
  int frac_digits = 0;
  bool any = false, dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mant = mant * 10 + (c - '0');
      any = true;
      if (dot) ++frac_digits;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any) return fail();
  long exp10 = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') return fail();
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    if (i == s.size()) return fail();
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return fail();
      exp10 = exp10 * 10 + (s[i] - '0');
      if (exp10 > 10000) return fail();
    }
    if (eneg) exp10 = -exp10;
  }
  exp10 -= frac_digits;
  Rational q = mant;
  Integer p = 1;
  for (long k = 0; k < (exp10 < 0 ? -exp10 : exp10); ++k) p *= 10;
  q = exp10 < 0 ? q / p : q * p;
  return neg ? Rational(-q) : q;
}

/// Smallest b with 2^-b <= q (q > 0).
inline unsigned bits_for(const Rational& q) {
  unsigned b = 0;
  while (Rational(1, pow2(b)) > q) ++b;
  return b;
}

}  // namespace knotwork
