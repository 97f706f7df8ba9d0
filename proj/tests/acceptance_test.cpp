// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runtime budgets apply to library calls; oracle time is excluded.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "grope_oracles.hpp"
#include "jacobi_oracles.hpp"
#include "knotwork/knot/knot_table.hpp"
#include "knotwork/knot/rho.hpp"

using namespace knotwork;

namespace {

using Clock = std::chrono::steady_clock;

struct Run {
  std::vector<std::string> failures;
  double seconds = 0;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }

  // Times only the library call.
  template <class F>
  auto timed(F&& f) {
    auto t0 = Clock::now();
    auto r = f();
    seconds += std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
  }
};

double gap(const IntervalReal& iv, double x) {
  double lo = static_cast<double>(iv.lo()), hi = static_cast<double>(iv.hi());
  return x < lo ? lo - x : (x > hi ? x - hi : 0.0);
}

std::string str(const IntervalReal& iv) {
  std::ostringstream o;
  o << "[" << to_decimal(iv.lo(), 10, true) << ", " << to_decimal(iv.hi(), 10, false) << "]";
  return o.str();
}

const Rational kMicro(1, 1000000);

void trefoil(Run& r) {
  SeifertMatrix v = r.timed([] { return seifert_matrix_from_braid(parse_braid("n=2; 1 1 1")); });
  LaurentPoly delta = r.timed([&] { return alexander_polynomial(v); });
  r.check(delta == LaurentPoly(std::map<int, Integer>{{-1, 1}, {0, -1}, {1, 1}}), "alexander " + delta.str());
  r.check(r.timed([&] { return d0(v); }) == 2, "d0");
  r.check(r.timed([&] { return determinant(v); }) == 3, "determinant");
  r.check(r.timed([&] { return arf(v); }) == 1, "arf");
  r.check(r.timed([&] { return levine_tristram(v, Rational(1, 2)); }) == -2, "signature at -1");
  SignatureStepFunction sf = r.timed([&] { return signature_function(v); });
  r.check(sf.jumps.size() == 2, "two jumps");
  if (sf.jumps.size() == 2) {
    r.check(sf.jumps[0].theta_within(kMicro).contains(Rational(1, 6)), "jump at 1/6");
    r.check(sf.jumps[1].theta_within(kMicro).contains(Rational(5, 6)), "jump at 5/6");
    r.check(sf.jumps[0].minimal_poly().degree() == 1 && sf.jumps[1].minimal_poly().degree() == 1,
            "jumps are exactly the rational angles");
  }
  RhoResult rho = r.timed([&] { return rho0(v, kMicro); });
  r.check(rho.value.width() <= kMicro, "rho width " + str(rho.value));
  r.check(rho.value.contains(Rational(-4, 3)), "rho contains -4/3: " + str(rho.value));
  r.check(gap(rho.value, oracle::riemann_rho(v, 100000)) <= 1e-3, "rho vs Riemann oracle");
}

void figure_eight(Run& r) {
  SeifertMatrix v = r.timed([] { return seifert_matrix_from_braid(parse_braid("n=3; 1 -2 1 -2")); });
  r.check(r.timed([&] { return determinant(v); }) == 5, "determinant");
  r.check(r.timed([&] { return arf(v); }) == 1, "arf");
  SignatureStepFunction sf = r.timed([&] { return signature_function(v); });
  r.check(sf.jumps.empty() && sf.identically_zero(), "signature function identically zero");
  r.check(chebyshev_rewrite(alexander_polynomial(v)) == IntPoly({3, -1}), "p(x) = 3 - x");
  RhoResult rho = r.timed([&] { return rho0(v, kMicro); });
  r.check(rho.value.is_point() && rho.value.lo() == 0, "rho exactly 0: " + str(rho.value));
  r.check(oracle::float_signature(v, 0.5) == 0 && oracle::float_signature(v, 0.1) == 0, "float oracle");
}

void torus_family(Run& r) {
  for (int q : {3, 5, 7, 9}) {
    std::string tag = "T(2," + std::to_string(q) + ") ";
    BraidWord b;
    b.strands = 2;
    b.letters.assign(q, 1);
    SeifertMatrix v = r.timed([&] { return seifert_matrix_from_braid(b); });
    r.check(v.intersection_determinant() == 1, tag + "det(V - V^T)");
    r.check(r.timed([&] { return determinant(v); }) == q, tag + "determinant");
    r.check(r.timed([&] { return levine_tristram(v, Rational(1, 2)); }) == -(q - 1), tag + "signature at -1");
    r.check(r.timed([&] { return d0(v); }) == q - 1, tag + "d0");
    RhoResult rho = r.timed([&] { return rho0(v, kMicro); });
    r.check(gap(rho.value, oracle::riemann_rho(v, 100000)) <= 1e-3, tag + "rho vs Riemann " + str(rho.value));
  }
}

void fox_milnor_fibered(Run& r) {
  SeifertMatrix six{SeifertMatrix::Rows{{-1, 1}, {0, 2}}};
  SeifertMatrix tref{SeifertMatrix::Rows{{-1, 1}, {0, -1}}};
  LaurentPoly d6 = alexander_polynomial(six);
  r.check(d6 == LaurentPoly(std::map<int, Integer>{{-1, 2}, {0, -5}, {1, 2}}) ||
              d6 == LaurentPoly(std::map<int, Integer>{{-1, -2}, {0, 5}, {1, -2}}),
          "6_1 alexander " + d6.str());
  r.check(fox_milnor_test(d6), "6_1 passes Fox-Milnor");
  ObstructionResult f6 = fibered_obstruction(six);
  r.check(!f6.passes && f6.reason == "not monic", "6_1 fails fibered: " + f6.reason);
  r.check(!fox_milnor_test(alexander_polynomial(tref)), "trefoil fails Fox-Milnor");
  r.check(fibered_obstruction(tref, 1).passes, "trefoil passes fibered with genus 1");
  // the table entry of 6_1 built from its braid agrees
  for (const auto& e : load_knot_table(oracle::data_path("knots.json")))
    if (e.name == "6_1") {
      SeifertMatrix v = e.seifert_matrix();
      r.check(fox_milnor_test(alexander_polynomial(v)) && !fibered_obstruction(v).passes, "table 6_1");
    }
}

void diagrams(Run& r) {
  using namespace knotwork::jacobi;
  auto two = r.timed([] { return enumerate_diagrams(2); });
  r.check(two.size() == 1 && two[0].key == canonical_form(diagrams::y()).key, "degree 2 is {Y}");
  r.check(r.timed([] { return dim_Bg(2); }) == 0, "dim 2");
  r.check(r.timed([] { return enumerate_diagrams(3); }).size() == 2, "degree 3 has 2 classes");
  r.check(r.timed([] { return dim_Bg(3); }) == 1, "dim 3");
  for (int i = 4; i <= 6; ++i) {
    auto ds = r.timed([&] { return enumerate_diagrams(i); });
    std::size_t lib = r.timed([&] { return dim_Bg(i); });
    for (int run = 0; run < 5; ++run) {
      std::mt19937_64 rng(7919 * i + run);
      std::vector<Diagram> shuffled = ds;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      std::size_t again = r.timed([&] { return dimension_of(shuffled, JacobiOptions{}).dimension; });
      r.check(again == lib, "library dimension unstable at degree " + std::to_string(i));
      r.check(oracle::dense_dimension(ds, rng) == lib, "dense oracle at degree " + std::to_string(i));
    }
  }
  std::size_t violations = 0;
  for (int i = 2; i <= 6; ++i) {
    std::map<std::string, int> degree_of;
    auto ds = enumerate_diagrams(i);
    for (const auto& d : ds) degree_of[d.key] = grope_degree(d.graph);
    RelationMatrix m = r.timed([&] { return relation_matrix(ds); });
    for (const auto& row : m.rows) {
      violations += row.degree_violations();
      for (const auto& [k, c] : row.terms) violations += !degree_of.count(k) || degree_of[k] != i;
    }
  }
  r.check(violations == 0, std::to_string(violations) + " homogeneity violations");
}

void gropes(Run& r) {
  using namespace knotwork::grope;
  for (int h = 1; h <= 6; ++h)
    r.check(class_of(symmetric_grope(static_cast<double>(h))) == (1LL << h), "class 2^h at h = " + std::to_string(h));
  r.check(class_of(symmetric_grope(1.5)) == 3, "class 3 at height 1.5");
  long long bad = 0;
  long long n = oracle::for_each_bracket(3, 8, [&](const Bracket& b) { bad += class_of(bracket_to_grope(b)) != weight(b); });
  r.check(bad == 0, std::to_string(bad) + " of " + std::to_string(n) + " brackets with class != weight");
  std::size_t basics = 0;
  for (const Bracket& b : oracle::hall_basis(3, 6)) {
    if (b.is_generator()) continue;
    ++basics;
    MagnusDepth d = magnus_depth(bracket_word(b, "abc"), 8);
    r.check(!d.at_least && d.depth == weight(b), "magnus depth of " + b.str());
    r.check(oracle::magnus_matches_lie(b, "abc"), "leading term of " + b.str());
  }
  long long expected = 0;
  for (int w = 2; w <= 6; ++w) expected += oracle::witt(3, w);
  r.check(static_cast<long long>(basics) == expected, "basic commutator count");
}

void properties(Run& r) {
  std::vector<std::pair<std::string, SeifertMatrix>> corpus;
  for (const auto& e : load_knot_table(oracle::data_path("knots.json"))) corpus.emplace_back(e.name, e.seifert_matrix());
  r.check(corpus.size() >= 12, "table has at least 12 knots");
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> genus(1, 3);
  for (int k = 0; k < 200; ++k) corpus.emplace_back("random" + std::to_string(k), oracle::random_seifert(genus(rng), rng));

  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& [name, v] = corpus[k];
    LaurentPoly d = alexander_polynomial(v);
    r.check(d == d.reciprocal() && d.eval(Integer(1)) == 1, name + ": alexander normalization");
    r.check(arf(v) == arf_from_determinant(v), name + ": arf dual computation");
    r.check(d0(v) <= 2 * v.genus(), name + ": d0 genus bound");

    SignatureStepFunction sf = signature_function(v);
    auto samples = arc_samples(sf, 2);
    for (std::size_t a = 0; a < samples.size(); ++a)
      for (const Rational& th : samples[a]) {
        int s = levine_tristram(v, th);
        r.check(s == sf.values[a] && s == oracle::float_signature(v, static_cast<double>(th)),
                name + ": arc constancy");
      }
    SignatureStepFunction m = signature_function(mirror(v));
    bool negated = m.values.size() == sf.values.size();
    for (std::size_t a = 0; negated && a < sf.values.size(); ++a) negated = m.values[a] == -sf.values[a];
    r.check(negated, name + ": mirror negation");

    const SeifertMatrix& other = corpus[(k + 1) % corpus.size()].second;
    RhoPropertyReport rep = rho0_properties_check(v, other.size() + v.size() <= 8 ? other : v);
    r.check(rep.mirror_antisymmetric, name + ": rho mirror antisymmetry");
    r.check(rep.additive, name + ": rho additivity");
    r.check(rep.genus_bounded, name + ": rho genus bound");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Run&)> body;
    double budget_seconds;  // 0: no runtime bound
  };
  std::vector<Criterion> criteria = {
      {"trefoil suite", trefoil, 1},
      {"figure-eight suite", figure_eight, 1},
      {"torus knots T(2,q)", torus_family, 5},
      {"Fox-Milnor and fiberedness", fox_milnor_fibered, 0},
      {"diagram algebra", diagrams, 60},
      {"grope calculus", gropes, 0},
      {"property suites", properties, 0},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Run r;
    auto t0 = Clock::now();
    try {
      criteria[k].body(r);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    double wall = std::chrono::duration<double>(Clock::now() - t0).count();
    double budget = criteria[k].budget_seconds;
    if (budget > 0 && r.seconds >= budget) r.failures.push_back("runtime over budget");
    bool ok = r.failures.empty();
    failed += !ok;
    std::printf("%s criterion %zu: %s (", ok ? "PASS" : "FAIL", k + 1, criteria[k].name);
    if (budget > 0) std::printf("library %.3f s of %.0f s, ", r.seconds, budget);
    std::printf("wall %.3f s)\n", wall);
    for (std::size_t j = 0; j < r.failures.size() && j < 10; ++j) std::printf("    %s\n", r.failures[j].c_str());
  }
  return failed ? 1 : 0;
}
