#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mgeo/error.hpp"
#include "mgeo/orthogonality.hpp"
#include "mgeo/space.hpp"
#include "oracle.hpp"

using namespace mgeo;

TEST(GridMin, Examples) {
  NormedSpace linf = NormedSpace::lp(kInf, 2);
  oracle::GridMin a = oracle::grid_min(linf, Vector{1.0, 1.0}, Vector{-1.0, 0.0}, {-4.0, 4.0, 10000, 3});
  EXPECT_NEAR(a.min_value, 1.0, 1e-15);
  EXPECT_NEAR(a.flat_lo, 0.0, 1e-3);
  EXPECT_NEAR(a.flat_hi, 2.0, 1e-3);

  NormedSpace s = builtin_space("stadium");
  oracle::GridMin b = oracle::grid_min(s, Vector{0.0, 1.0}, Vector{1.0, 0.0}, {-4.0, 4.0, 10000, 3});
  EXPECT_NEAR(b.min_value, 1.0, 1e-12);
  EXPECT_NEAR(b.flat_lo, -1.0, 1e-3);
  EXPECT_NEAR(b.flat_hi, 1.0, 1e-3);
}

TEST(GridMin, EuclideanRandomPairs) {
  NormedSpace l2 = NormedSpace::lp(2.0, 2);
  std::mt19937_64 rng(21);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 50; ++k) {
    Vector x{nd(rng), nd(rng)}, y{nd(rng), nd(rng)};
    double b = 2.0 * x.euclidean_norm() / y.euclidean_norm();
    oracle::GridMin g = oracle::grid_min(l2, x, y, {-b, b, 1000, 6});
    oracle::ClosedFormMin c = oracle::closed_form_lp_min(2.0, x, y);
    EXPECT_NEAR(g.argmin, c.argmin, 1e-7);
    EXPECT_NEAR(g.min_value, c.min_value, 1e-12);
  }
}

TEST(GridMin, RejectsBadGrid) {
  NormedSpace l2 = NormedSpace::lp(2.0, 2);
  EXPECT_THROW(oracle::grid_min(l2, Vector{1.0, 0.0}, Vector{0.0, 1.0}, {1.0, -1.0, 10, 0}), InvalidArgument);
  EXPECT_THROW(oracle::grid_min(l2, Vector{1.0, 0.0}, Vector{0.0, 1.0}, {-1.0, 1.0, 1, 0}), InvalidArgument);
}

TEST(ClosedForm, Examples) {
  oracle::ClosedFormMin a = oracle::closed_form_lp_min(2.0, Vector{1.0, 0.0}, Vector{1.0, 1.0});
  EXPECT_DOUBLE_EQ(a.argmin, -0.5);
  EXPECT_DOUBLE_EQ(a.min_value, std::numbers::sqrt2 / 2.0);

  oracle::ClosedFormMin b = oracle::closed_form_lp_min(kInf, Vector{1.0, 1.0}, Vector{-1.0, 0.0});
  EXPECT_DOUBLE_EQ(b.min_value, 1.0);
  EXPECT_DOUBLE_EQ(b.lo, 0.0);
  EXPECT_DOUBLE_EQ(b.hi, 2.0);

  oracle::ClosedFormMin c = oracle::closed_form_lp_min(1.0, Vector{1.0, 0.0}, Vector{0.0, 1.0});
  EXPECT_DOUBLE_EQ(c.argmin, 0.0);
  EXPECT_DOUBLE_EQ(c.min_value, 1.0);

  EXPECT_THROW(oracle::closed_form_lp_min(3.0, Vector{1.0, 0.0}, Vector{0.0, 1.0}), InvalidArgument);
  EXPECT_THROW(oracle::closed_form_lp_min(2.0, Vector{1.0, 0.0}, Vector{0.0, 0.0}), InvalidArgument);
}

// directional_min against both oracles
TEST(OracleEquivalence, GridMinPerBuiltin) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  for (const std::string& name : builtin_suite()) {
    NormedSpace s = builtin_space(name);
    for (int k = 0; k < 100; ++k) {
      Vector x{nd(rng), nd(rng)}, y{nd(rng), nd(rng)};
      MinimizationResult m = directional_min(s, x, y);
      double b = 2.0 * eval_norm(s, x) / eval_norm(s, y);
      oracle::GridMin g = oracle::grid_min(s, x, y, {-b, b, 2000, 6});
      EXPECT_NEAR(m.min_value, g.min_value, 1e-6) << name;
      EXPECT_LE(m.min_value, g.min_value + 1e-12) << name;
    }
  }
}

TEST(OracleEquivalence, ClosedFormLp) {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> nd;
  for (double p : {1.0, 2.0, kInf}) {
    for (std::size_t d = 2; d <= 4; ++d) {
      NormedSpace s = NormedSpace::lp(p, d);
      for (int k = 0; k < 100; ++k) {
        std::vector<double> xc(d), yc(d);
        for (std::size_t i = 0; i < d; ++i) {
          xc[i] = nd(rng);
          yc[i] = nd(rng);
        }
        Vector x(xc), y(yc);
        MinimizationResult m = directional_min(s, x, y);
        oracle::ClosedFormMin c = oracle::closed_form_lp_min(p, x, y);
        EXPECT_NEAR(m.min_value, c.min_value, 1e-9) << p << " " << d;
        double scale = eval_norm(s, x) / eval_norm(s, y);
        EXPECT_GE(m.argmin, c.lo - 1e-6 * scale) << p << " " << d;
        EXPECT_LE(m.argmin, c.hi + 1e-6 * scale) << p << " " << d;
      }
    }
  }
}

TEST(CompanionRange, Euclidean) {
  oracle::CompanionRange r = oracle::companion_range(NormedSpace::lp(2.0, 2), Vector{1.0, 0.0}, 720);
  EXPECT_GE(r.hits, 1u);
  EXPECT_NEAR(0.5 * (r.phi_lo + r.phi_hi), std::numbers::pi / 2.0, 1e-2);
}

TEST(SweepMax, SkewEuclidean) {
  double h = std::numbers::sqrt2 / 2.0;
  oracle::SweepMax m = oracle::sweep_max_coefficient(NormedSpace::lp(2.0, 2), Vector{1.0, 0.0}, Vector{h, h}, 0);
  EXPECT_NEAR(m.value, std::numbers::sqrt2, 1e-10);
}
