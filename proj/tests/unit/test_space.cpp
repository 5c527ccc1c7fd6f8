#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mgeo/error.hpp"
#include "mgeo/space.hpp"

using namespace mgeo;

TEST(EvalNorm, Examples) {
  EXPECT_DOUBLE_EQ(eval_norm(NormedSpace::lp(kInf, 2), Vector{1.0, 1.0}), 1.0);
  EXPECT_DOUBLE_EQ(eval_norm(NormedSpace::lp(2.0, 2), Vector{3.0, 4.0}), 5.0);
  EXPECT_NEAR(eval_norm(builtin_space("stadium"), Vector{1.0, 1.0}), 1.0, 1e-12);
  EXPECT_NEAR(eval_norm(builtin_space("stadium"), Vector{std::numbers::sqrt2, 0.0}), 1.0, 1e-12);
  EXPECT_NEAR(eval_norm(builtin_space("quartic_cubic"), Vector{0.0, 1.0}), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(eval_norm(NormedSpace::lp(1.0, 3), Vector{1.0, -2.0, 3.0}), 6.0);
  EXPECT_NEAR(eval_norm(NormedSpace::lp(3.0, 2), Vector{1.0, 1.0}), std::cbrt(2.0), 1e-15);
}

TEST(EvalNorm, Errors) {
  NormedSpace s = NormedSpace::lp(2.0, 2);
  EXPECT_THROW(eval_norm(s, Vector{1.0, 2.0, 3.0}), DimensionMismatch);
  EXPECT_THROW(NormedSpace::lp(0.5, 2), InvalidSpace);
  EXPECT_THROW(NormedSpace::lp(2.0, 0), InvalidSpace);
  EXPECT_THROW(normalize(s, Vector{0.0, 0.0}), InvalidArgument);
  EXPECT_THROW(builtin_space("nope"), InvalidArgument);
  EXPECT_THROW(sphere_point_2d(NormedSpace::lp(2.0, 3), 0.0), DimensionMismatch);
}

TEST(Polyhedral, FunctionalsOfLinfAgree) {
  NormedSpace s = NormedSpace::polyhedral({Vector{1.0, 0.0}, Vector{0.0, 1.0}});
  NormedSpace linf = NormedSpace::lp(kInf, 2);
  for (int k = 0; k < 50; ++k) {
    Vector v{std::cos(0.3 * k) * 2.0, std::sin(0.7 * k)};
    EXPECT_DOUBLE_EQ(eval_norm(s, v), eval_norm(linf, v));
  }
  EXPECT_TRUE(validate_norm(s, 10000, 1e-10).passed);
  EXPECT_THROW(NormedSpace::polyhedral({Vector{1.0, 0.0}}), InvalidSpace);
}

TEST(SpherePoint, Examples) {
  Vector a = sphere_point_2d(NormedSpace::lp(2.0, 2), 0.0);
  EXPECT_NEAR(a[0], 1.0, 1e-15);
  EXPECT_NEAR(a[1], 0.0, 1e-15);
  Vector b = sphere_point_2d(NormedSpace::lp(kInf, 2), std::numbers::pi / 4.0);
  EXPECT_NEAR(b[0], 1.0, 1e-12);
  EXPECT_NEAR(b[1], 1.0, 1e-12);
  Vector c = sphere_point_2d(builtin_space("stadium"), std::numbers::pi / 2.0);
  EXPECT_NEAR(c[0], 0.0, 1e-12);
  EXPECT_NEAR(c[1], 1.0, 1e-12);
}

TEST(SpherePoint, UnitNormEverywhere) {
  for (const std::string& name : builtin_suite()) {
    NormedSpace s = builtin_space(name);
    for (int k = 0; k < 720; ++k) {
      double t = 2.0 * std::numbers::pi * k / 720.0 + 1e-3;
      EXPECT_NEAR(eval_norm(s, sphere_point_2d(s, t)), 1.0, 1e-12) << name << " " << t;
    }
  }
}

TEST(Builtins, NamesAndDims) {
  EXPECT_EQ(builtin_space("lp:3", 3).dim(), 3u);
  EXPECT_EQ(builtin_space("l2", 4).dim(), 4u);
  EXPECT_TRUE(std::isinf(*builtin_space("lp:inf").p()));
  EXPECT_TRUE(builtin_space("stadium").is_gauge());
  EXPECT_THROW(builtin_space("stadium", 3), InvalidArgument);
  for (const std::string& name : builtin_suite()) EXPECT_NO_THROW(builtin_space(name)) << name;
}

TEST(ValidateNorm, BuiltinsPass) {
  NormValidationReport r = validate_norm(NormedSpace::lp(3.0, 3), 10000, 1e-12);
  EXPECT_TRUE(r.passed);
  for (const AxiomCheck& a : r.axioms) EXPECT_LE(a.worst_violation, 1e-12) << a.axiom;
  EXPECT_EQ(r.axioms.size(), 3u);
  for (const std::string& name : builtin_suite()) {
    EXPECT_TRUE(validate_norm(builtin_space(name), 10000, 1e-10).passed) << name;
  }
}

TEST(ValidateNorm, NonConvexStarFails) {
  Gauge2DBoundary b;
  b.symmetric = false;
  std::vector<Point2> pts;
  for (int k = 0; k < 8; ++k) {
    double a = k * std::numbers::pi / 4.0;
    double r = k % 2 == 0 ? 1.0 : 0.4;
    pts.push_back({r * std::cos(a), r * std::sin(a)});
  }
  for (int k = 0; k < 8; ++k) b.pieces.push_back(SegmentArc{pts[k], pts[(k + 1) % 8]});
  NormedSpace s = NormedSpace::gauge(b, "star");
  NormValidationReport r = validate_norm(s, 10000, 1e-10);
  EXPECT_FALSE(r.passed);
  const AxiomCheck* tri = nullptr;
  for (const AxiomCheck& a : r.axioms) {
    if (a.axiom == "triangle") tri = &a;
  }
  ASSERT_NE(tri, nullptr);
  EXPECT_FALSE(tri->passed);
  ASSERT_EQ(tri->witness.size(), 2u);
  const Vector& u = tri->witness[0];
  const Vector& v = tri->witness[1];
  EXPECT_GT(eval_norm(s, u + v), eval_norm(s, u) + eval_norm(s, v));

  // a violating pair by grid scan over the sphere
  double worst = 0.0;
  for (int i = 0; i < 360; ++i) {
    for (int j = 0; j < 360; ++j) {
      Vector a = sphere_point_2d(s, i * std::numbers::pi / 180.0);
      Vector c = sphere_point_2d(s, j * std::numbers::pi / 180.0);
      worst = std::max(worst, eval_norm(s, a + c) - 2.0);
    }
  }
  EXPECT_GT(worst, 1.0);
}

TEST(ValidateNorm, Deterministic) {
  NormedSpace s = builtin_space("quartic_cubic");
  NormValidationReport a = validate_norm(s, 2000, 1e-10, 5);
  NormValidationReport b = validate_norm(s, 2000, 1e-10, 5);
  ASSERT_EQ(a.axioms.size(), b.axioms.size());
  for (std::size_t i = 0; i < a.axioms.size(); ++i) {
    EXPECT_EQ(a.axioms[i].worst_violation, b.axioms[i].worst_violation);
  }
}
