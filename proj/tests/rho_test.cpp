#include <gtest/gtest.h>

#include <cmath>

#include "knotwork/knot/knot_table.hpp"
#include "knotwork/knot/rho.hpp"
#include "oracles.hpp"

using namespace knotwork;

namespace {

const SeifertMatrix kUnknot{SeifertMatrix::Rows{}};
const SeifertMatrix kTrefoil{SeifertMatrix::Rows{{-1, 1}, {0, -1}}};
const SeifertMatrix kFigureEight{SeifertMatrix::Rows{{1, 1}, {0, -1}}};
const Rational kMicro(1, 1000000);

double to_double(const Rational& q) { return static_cast<double>(q); }

// Distance from x to the interval (0 when inside).
double gap(const IntervalReal& iv, double x) {
  double lo = to_double(iv.lo()), hi = to_double(iv.hi());
  return x < lo ? lo - x : (x > hi ? x - hi : 0.0);
}

SeifertMatrix torus(int q) {
  BraidWord b;
  b.strands = 2;
  b.letters.assign(q, 1);
  return seifert_matrix_from_braid(b);
}

// T(2,q): sigma drops by 2 at each theta = (2j-1)/(2q) below 1/2, so
// rho = -2 * sum_j (1 - (2j-1)/q).
Rational torus_rho(int q) {
  Rational r = 0;
  for (int j = 1; 2 * j - 1 < q; ++j) r -= 2 * (1 - Rational(2 * j - 1, q));
  return r;
}

}  // namespace

TEST(Rho, UnknotIsExactlyZero) {
  RhoResult r = rho0(kUnknot, kMicro);
  EXPECT_TRUE(r.value.is_point());
  EXPECT_EQ(r.value.lo(), 0);
  EXPECT_EQ(r.measure, "normalized_1");
}

TEST(Rho, Trefoil) {
  RhoResult r = rho0(kTrefoil, kMicro);
  EXPECT_LE(r.value.width(), kMicro);
  EXPECT_TRUE(r.value.contains(Rational(-4, 3)));
  EXPECT_LE(gap(r.value, oracle::riemann_rho(kTrefoil)), 1e-3);
  ASSERT_EQ(r.exact_form.size(), 3u);
  EXPECT_EQ(r.exact_form[1].sigma, -2);
}

TEST(Rho, FigureEightIsExactlyZero) {
  RhoResult r = rho0(kFigureEight, kMicro);
  EXPECT_TRUE(r.value.is_point());
  EXPECT_EQ(r.value.lo(), 0);
  EXPECT_EQ(oracle::riemann_rho(kFigureEight, 1000), 0.0);
}

TEST(Rho, PreconditionOnPrecision) {
  EXPECT_THROW(rho0(kTrefoil, Rational(0)), PreconditionError);
  EXPECT_THROW(rho0(kTrefoil, Rational(-1)), PreconditionError);
}

TEST(Rho, ArcLengthsSumToOne) {
  for (const auto& e : load_knot_table(oracle::data_path("knots.json"))) {
    RhoResult r = rho0(e.seifert_matrix(), kMicro);
    std::vector<RhoArc> ones = r.exact_form;
    for (auto& a : ones) a.sigma = 1;
    EXPECT_TRUE(evaluate_exact_form(ones, kMicro).contains(Rational(1))) << e.name;
  }
}

TEST(Rho, PropertiesCheckExamples) {
  RhoPropertyReport a = rho0_properties_check(kTrefoil, mirror(kTrefoil));
  EXPECT_TRUE(a.ok());
  EXPECT_TRUE(a.rho_sum.contains(Rational(0)));
  EXPECT_LE(a.rho_sum.width(), kMicro);

  RhoPropertyReport b = rho0_properties_check(kTrefoil);
  EXPECT_TRUE(b.ok());
  EXPECT_TRUE(b.rho_sum.contains(Rational(-8, 3)));
  EXPECT_LE(gap(b.rho_sum, oracle::riemann_rho(connected_sum(kTrefoil, kTrefoil))), 1e-3);

  RhoPropertyReport u = rho0_properties_check(kUnknot);
  EXPECT_TRUE(u.ok());
  EXPECT_TRUE(u.rho.is_point() && u.rho_sum.is_point() && u.rho_mirror.is_point());
}

TEST(Rho, TableAgreesWithRiemannOracle) {
  for (const auto& e : load_knot_table(oracle::data_path("knots.json"))) {
    SeifertMatrix v = e.seifert_matrix();
    RhoResult r = rho0(v, kMicro);
    int max_sigma = 0;
    for (const auto& a : r.exact_form) max_sigma = std::max(max_sigma, std::abs(a.sigma));
    double tol = 10.0 * std::max(1, v.genus()) / 1e5 * max_sigma;
    EXPECT_LE(gap(r.value, oracle::riemann_rho(v)), tol) << e.name;
  }
}

TEST(Rho, RandomMatricesAgreeWithRiemannOracle) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> genus(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    SeifertMatrix v = oracle::random_seifert(genus(rng), rng);
    RhoResult r = rho0(v, kMicro);
    double tol = 10.0 * v.genus() / 2e4 * 2 * v.genus();
    EXPECT_LE(gap(r.value, oracle::riemann_rho(v, 20000)), tol) << trial;
  }
}

TEST(Rho, AdditiveAndAntisymmetricOverTablePairs) {
  auto table = load_knot_table(oracle::data_path("knots.json"));
  for (const auto& a : table)
    for (const auto& b : table) {
      if (a.name > b.name) continue;
      RhoPropertyReport rep = rho0_properties_check(a.seifert_matrix(), b.seifert_matrix());
      EXPECT_TRUE(rep.mirror_antisymmetric) << a.name << " " << b.name;
      EXPECT_TRUE(rep.additive) << a.name << " " << b.name;
      EXPECT_TRUE(rep.genus_bounded) << a.name;
    }
}

TEST(Rho, TorusKnotsAtFiftyDigits) {
  Rational fifty(1);
  for (int k = 0; k < 50; ++k) fifty /= 10;
  for (int q : {3, 5, 7, 9}) {
    SeifertMatrix v = torus(q);
    EXPECT_EQ(determinant(v), q);
    EXPECT_EQ(levine_tristram(v, Rational(1, 2)), -(q - 1));
    RhoResult coarse = rho0(v, kMicro);
    RhoResult fine = rho0(v, fifty);
    EXPECT_LE(fine.value.width(), fifty);
    EXPECT_TRUE(fine.value.intersects(coarse.value)) << q;
    EXPECT_TRUE(evaluate_exact_form(coarse.exact_form, fifty).intersects(fine.value)) << q;
    EXPECT_TRUE(fine.value.contains(torus_rho(q))) << q;
    EXPECT_LE(gap(coarse.value, oracle::riemann_rho(v)), 1e-3) << q;
  }
}
