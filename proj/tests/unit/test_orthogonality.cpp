#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mgeo/error.hpp"
#include "mgeo/orthogonality.hpp"
#include "mgeo/space.hpp"
#include "oracle.hpp"

using namespace mgeo;

namespace {

const NormedSpace kLinf = NormedSpace::lp(kInf, 2);
const NormedSpace kL2 = NormedSpace::lp(2.0, 2);
const NormedSpace kL1 = NormedSpace::lp(1.0, 2);
const NormedSpace kL4 = NormedSpace::lp(4.0, 2);

double angle_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), std::numbers::pi);
  return std::min(d, std::numbers::pi - d);
}

}  // namespace

TEST(DirectionalMin, LinfFlatIntervals) {
  MinimizationResult a = directional_min(kLinf, Vector{1.0, 0.0}, Vector{0.0, 1.0});
  EXPECT_NEAR(a.min_value, 1.0, 1e-12);
  EXPECT_TRUE(a.genuinely_flat);
  EXPECT_NEAR(a.flat_interval.lo, -1.0, 1e-6);
  EXPECT_NEAR(a.flat_interval.hi, 1.0, 1e-6);

  MinimizationResult b = directional_min(kLinf, Vector{1.0, 1.0}, Vector{-1.0, 0.0});
  EXPECT_NEAR(b.min_value, 1.0, 1e-12);
  EXPECT_NEAR(b.flat_interval.lo, 0.0, 1e-6);
  EXPECT_NEAR(b.flat_interval.hi, 2.0, 1e-6);
}

TEST(DirectionalMin, EuclideanClosedForm) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 200; ++k) {
    Vector x{nd(rng), nd(rng)}, y{nd(rng), nd(rng)};
    MinimizationResult m = directional_min(kL2, x, y);
    double l = -x.dot(y) / y.dot(y);
    double v = std::sqrt(std::max(0.0, x.dot(x) - x.dot(y) * x.dot(y) / y.dot(y)));
    EXPECT_NEAR(m.min_value, v, 1e-9);
    EXPECT_NEAR(m.argmin, l, 1e-6 * x.euclidean_norm() / y.euclidean_norm());
    EXPECT_FALSE(m.genuinely_flat);
    EXPECT_EQ(m.flat_interval.lo, m.flat_interval.hi);
  }
}

TEST(DirectionalMin, Errors) {
  EXPECT_THROW(directional_min(kL2, Vector{0.0, 0.0}, Vector{1.0, 0.0}), InvalidArgument);
  EXPECT_THROW(directional_min(kL2, Vector{1.0, 0.0}, Vector{0.0, 0.0}), InvalidArgument);
  EXPECT_THROW(directional_min(kL2, Vector{1.0, 0.0, 0.0}, Vector{0.0, 1.0}), DimensionMismatch);
}

TEST(DirectionalMin, ProbeSeesEveryEvaluation) {
  int calls = 0;
  MinimizationResult m = directional_min(kL4, Vector{1.0, 0.3}, Vector{0.2, 1.0}, {},
                                         [&](double, double) { ++calls; });
  EXPECT_GT(calls, 10);
  EXPECT_LE(calls, m.evaluations);
}

TEST(Birkhoff, Examples) {
  EXPECT_TRUE(is_birkhoff(kLinf, Vector{1.0, 1.0}, Vector{-1.0, 0.0}));
  EXPECT_TRUE(is_birkhoff(kL2, Vector{1.0, 0.0}, Vector{0.0, 1.0}));
  OrthogonalityVerdict v = classify(kL2, Vector{1.0, 0.0}, Vector{1.0, 1.0});
  EXPECT_FALSE(is_birkhoff(kL2, Vector{1.0, 0.0}, Vector{1.0, 1.0}));
  EXPECT_EQ(v.relation, Relation::NotOrthogonal);
  EXPECT_NEAR(v.witness, -0.5, 1e-6);
  EXPECT_LT(v.witness_value, 1.0);
}

TEST(StrongBirkhoff, Examples) {
  EXPECT_FALSE(is_strongly_birkhoff(kLinf, Vector{1.0, 0.0}, Vector{0.0, 1.0}));
  EXPECT_TRUE(is_strongly_birkhoff(kL2, Vector{1.0, 0.0}, Vector{0.0, 1.0}));
  EXPECT_TRUE(is_strongly_birkhoff(kL1, Vector{1.0, 0.0}, Vector{0.0, 1.0}));
}

TEST(Classify, Examples) {
  OrthogonalityVerdict a = classify(kLinf, Vector{1.0, 1.0}, Vector{-1.0, 0.0});
  EXPECT_EQ(a.relation, Relation::BirkhoffOnly);
  EXPECT_NEAR(a.witness, 1.0, 1e-6);
  EXPECT_NEAR(a.witness_value, 1.0, 1e-12);

  OrthogonalityVerdict b = classify(kL2, Vector{1.0, 0.0}, Vector{1.0, 0.0});
  EXPECT_EQ(b.relation, Relation::NotOrthogonal);
  EXPECT_NEAR(b.witness, -1.0, 1e-6);

  OrthogonalityVerdict c = classify(kLinf, Vector{1.0, 0.0}, Vector{0.0, 1.0});
  EXPECT_EQ(c.relation, Relation::BirkhoffOnly);
  EXPECT_NE(c.witness, 0.0);
  EXPECT_LE(std::abs(c.witness), 1.0);
}

TEST(Classify, L4CompanionIsStrongAndOracleAgrees) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  for (int k = 0; k < 20; ++k) {
    Vector x = sphere_point_2d(kL4, ang(rng));
    Vector y = orthogonal_companion_2d(kL4, x);
    EXPECT_EQ(classify(kL4, x, y).relation, Relation::StronglyBirkhoff);
    oracle::GridMin g = oracle::grid_min(kL4, x, y, {-2.0, 2.0, 4000, 0});
    EXPECT_GE(g.min_value, 1.0 - 1e-9);
    // the 1e-12 sublevel of the coarse grid stays within a couple of cells of 0
    EXPECT_LE(g.flat_hi - g.flat_lo, 4e-3);
  }
}

TEST(Classify, ScaleInvariance) {
  struct Case {
    NormedSpace s;
    Vector x, y;
  };
  std::vector<Case> cases = {{kLinf, Vector{1.0, 1.0}, Vector{-1.0, 0.0}},
                             {kLinf, Vector{1.0, 0.0}, Vector{0.0, 1.0}},
                             {kL2, Vector{1.0, 0.0}, Vector{0.0, 1.0}},
                             {kL2, Vector{1.0, 0.0}, Vector{1.0, 1.0}},
                             {builtin_space("stadium"), Vector{0.0, 1.0}, Vector{1.0, 0.0}},
                             {kL4, Vector{1.0, 0.0}, Vector{0.0, 1.0}}};
  for (const Case& c : cases) {
    Relation base = classify(c.s, c.x, c.y).relation;
    for (double a : {1e-3, 1.0, 1e3}) {
      for (double b : {1e-3, 1.0, 1e3, -1.0}) {
        EXPECT_EQ(classify(c.s, a * c.x, b * c.y).relation, base) << c.s.name() << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(Classify, StadiumFlatTop) {
  NormedSpace s = builtin_space("stadium");
  OrthogonalityVerdict v = classify(s, Vector{0.0, 1.0}, Vector{1.0, 0.0});
  EXPECT_EQ(v.relation, Relation::BirkhoffOnly);
  EXPECT_NEAR(v.min_result.flat_interval.lo, -1.0, 1e-6);
  EXPECT_NEAR(v.min_result.flat_interval.hi, 1.0, 1e-6);
  oracle::GridMin g = oracle::grid_min(s, Vector{0.0, 1.0}, Vector{1.0, 0.0}, {-4.0, 4.0, 8000, 2});
  EXPECT_NEAR(g.min_value, 1.0, 1e-12);
  EXPECT_NEAR(g.flat_lo, -1.0, 2e-3);
  EXPECT_NEAR(g.flat_hi, 1.0, 2e-3);
}

TEST(Companion, Euclidean) {
  CompanionArc a = companion_arc_2d(kL2, Vector{1.0, 0.0});
  EXPECT_TRUE(a.unique);
  EXPECT_LE(angle_gap(a.phi, std::numbers::pi / 2.0), 1e-6);
  EXPECT_NEAR(std::abs(a.y[1]), 1.0, 1e-6);
}

TEST(Companion, LinfCornerArc) {
  Vector x{1.0, 1.0};
  CompanionArc a = companion_arc_2d(kLinf, x);
  EXPECT_FALSE(a.unique);
  oracle::CompanionRange r = oracle::companion_range(kLinf, x, 720);
  EXPECT_NEAR(a.phi_lo, r.phi_lo, 2.0 * std::numbers::pi / 720.0);
  EXPECT_NEAR(a.phi_hi, r.phi_hi, 2.0 * std::numbers::pi / 720.0);
  EXPECT_NEAR(a.phi_lo, std::numbers::pi / 2.0, 1e-6);
  EXPECT_NEAR(a.phi_hi, std::numbers::pi, 1e-6);
  // (-1, 0) is on the arc; the midpoint is (-1, 1)
  EXPECT_TRUE(is_birkhoff(kLinf, x, Vector{-1.0, 0.0}));
  EXPECT_NEAR(a.y[0], -1.0, 1e-6);
  EXPECT_NEAR(a.y[1], 1.0, 1e-6);
}

TEST(Companion, L4Axis) {
  Vector y = orthogonal_companion_2d(kL4, Vector{1.0, 0.0});
  EXPECT_NEAR(std::abs(y[0]), 0.0, 1e-6);
  EXPECT_NEAR(std::abs(y[1]), 1.0, 1e-6);
  oracle::CompanionRange r = oracle::companion_range(kL4, Vector{1.0, 0.0}, 720);
  EXPECT_LE(angle_gap(0.5 * (r.phi_lo + r.phi_hi), std::numbers::pi / 2.0), 2e-2);
}

TEST(Companion, MatchesOracleOnBuiltins) {
  for (const std::string& name : builtin_suite()) {
    NormedSpace s = builtin_space(name);
    for (double t : {0.1, 0.9, 2.0, 4.0}) {
      Vector x = sphere_point_2d(s, t);
      CompanionArc a = companion_arc_2d(s, x);
      EXPECT_TRUE(is_birkhoff(s, x, a.y)) << name << " " << t;
      oracle::CompanionRange r = oracle::companion_range(s, x, 720);
      double cell = std::numbers::pi / 720.0;
      if (r.hits == 0) {
        EXPECT_NEAR(a.phi, r.phi_best, 1.5 * cell) << name << " " << t;
      } else {
        EXPECT_GE(a.phi, r.phi_lo - 2.0 * cell) << name << " " << t;
        EXPECT_LE(a.phi, r.phi_hi + 2.0 * cell) << name << " " << t;
      }
    }
  }
}

TEST(Companion, Errors) {
  EXPECT_THROW(companion_arc_2d(NormedSpace::lp(2.0, 3), Vector{1.0, 0.0, 0.0}), Error);
}

TEST(AngleOf, Range) {
  EXPECT_NEAR(angle_of(Vector{1.0, 0.0}), 0.0, 1e-15);
  EXPECT_NEAR(angle_of(Vector{0.0, -1.0}), 1.5 * std::numbers::pi, 1e-15);
  EXPECT_NEAR(angle_of(Vector{-1.0, 0.0}), std::numbers::pi, 1e-15);
}
