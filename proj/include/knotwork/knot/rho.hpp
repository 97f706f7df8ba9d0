#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotwork/knot/classical.hpp"

namespace knotwork {

/// One arc of the signature step function: value `sigma` on (lo, hi), where a
/// missing endpoint means theta = 0 (lo) or theta = 1 (hi).
struct RhoArc {
  int sigma = 0;
  std::optional<AlgebraicAngle> lo, hi;
};

/// rho_0 = integral of the Levine-Tristram signature over the circle,
/// with the circle measure normalized to total mass 1.
struct RhoResult {
  IntervalReal value;
  std::vector<RhoArc> exact_form;
  Rational precision;
  std::string measure = "normalized_1";
};

/// Encloses sum sigma_k * (hi_k - lo_k) to within `precision`.
inline IntervalReal evaluate_exact_form(std::vector<RhoArc> arcs, const Rational& precision) {
  if (precision <= 0) throw PreconditionError("precision must be positive");
  // Each endpoint enters the sum with weight |sigma| of its two arcs; refining
  // every root well below precision / total weight usually succeeds at once.
  long weight = 1;
  for (const auto& arc : arcs) weight += 2 * std::abs(arc.sigma);
  Rational root_width = precision / (16 * weight);
  unsigned bits = bits_for(precision / weight) + 8;
  while (true) {
    IntervalReal total(Rational(0));
    for (auto& arc : arcs) {
      if (arc.sigma == 0) continue;
      if (arc.lo) arc.lo->refine_to(root_width);
      if (arc.hi) arc.hi->refine_to(root_width);
      IntervalReal lo = arc.lo ? arc.lo->theta(bits) : IntervalReal(Rational(0));
      IntervalReal hi = arc.hi ? arc.hi->theta(bits) : IntervalReal(Rational(1));
      total += IntervalReal(static_cast<long>(arc.sigma)) * (hi - lo);
    }
    if (total.width() <= precision) return total;
    root_width /= 1 << 16;
    bits += 16;
  }
}

inline std::vector<RhoArc> step_arcs(const SignatureStepFunction& sf) {
  std::vector<RhoArc> arcs;
  for (std::size_t k = 0; k < sf.values.size(); ++k) {
    RhoArc a;
    a.sigma = sf.values[k];
    if (k > 0) a.lo = sf.jumps[k - 1];
    if (k < sf.jumps.size()) a.hi = sf.jumps[k];
    arcs.push_back(std::move(a));
  }
  return arcs;
}

inline RhoResult rho0(const SeifertMatrix& v, const Rational& precision) {
  if (precision <= 0) throw PreconditionError("precision must be positive");
  RhoResult r;
  r.precision = precision;
  r.exact_form = step_arcs(signature_function(v));
  r.value = evaluate_exact_form(r.exact_form, precision);
  return r;
}

struct RhoPropertyReport {
  IntervalReal rho, rho_mirror, rho_other, rho_sum;
  bool mirror_antisymmetric = false;  // rho(-K) overlaps -rho(K)
  bool additive = false;              // rho(K # K') overlaps rho(K) + rho(K')
  bool genus_bounded = false;         // |rho(K)| <= 2 g
  bool ok() const { return mirror_antisymmetric && additive && genus_bounded; }
};

/// Checks mirror antisymmetry, additivity under connected sum with `other`,
/// and the genus bound, all as statements about certified enclosures.
inline RhoPropertyReport rho0_properties_check(const SeifertMatrix& v, const SeifertMatrix& other,
                                               const Rational& precision = Rational(1, 1000000)) {
  RhoPropertyReport rep;
  rep.rho = rho0(v, precision).value;
  rep.rho_mirror = rho0(mirror(v), precision).value;
  rep.rho_other = rho0(other, precision).value;
  rep.rho_sum = rho0(connected_sum(v, other), precision).value;
  rep.mirror_antisymmetric = rep.rho_mirror.intersects(-rep.rho);
  rep.additive = rep.rho_sum.intersects(rep.rho + rep.rho_other);
  Rational bound = 2 * v.genus();
  // the enclosure must meet [-2g, 2g]
  rep.genus_bounded = rep.rho.intersects(IntervalReal(-bound, bound));
  return rep;
}

inline RhoPropertyReport rho0_properties_check(const SeifertMatrix& v) { return rho0_properties_check(v, v); }

}  // namespace knotwork
