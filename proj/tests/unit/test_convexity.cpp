#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mgeo/convexity.hpp"
#include "mgeo/error.hpp"
#include "mgeo/space.hpp"

using namespace mgeo;

namespace {

// every point of the witness segment is on the sphere
void expect_on_sphere(const NormedSpace& s, const FlatWitness& w) {
  EXPECT_NEAR(eval_norm(s, w.u), 1.0, 1e-9);
  EXPECT_NEAR(eval_norm(s, w.v), 1.0, 1e-9);
  for (int k = 1; k < 10; ++k) {
    double t = k / 10.0;
    EXPECT_GE(eval_norm(s, (1.0 - t) * w.u + t * w.v), 1.0 - 1e-9);
  }
  EXPECT_GE(w.separation, 1e-3);
}

}  // namespace

TEST(ConvexityProbe, LinfEdge) {
  NormedSpace s = NormedSpace::lp(kInf, 2);
  ConvexityReport r = strict_convexity_probe(s);
  ASSERT_EQ(r.verdict, ConvexityVerdict::FlatFound);
  ASSERT_TRUE(r.flat_witness);
  const FlatWitness& w = *r.flat_witness;
  expect_on_sphere(s, w);
  bool same_edge = (std::abs(std::abs(w.u[0]) - 1.0) < 1e-9 && std::abs(w.u[0] - w.v[0]) < 1e-9) ||
                   (std::abs(std::abs(w.u[1]) - 1.0) < 1e-9 && std::abs(w.u[1] - w.v[1]) < 1e-9);
  EXPECT_TRUE(same_edge) << w.u.to_string() << " " << w.v.to_string();
}

TEST(ConvexityProbe, StadiumFlatTop) {
  NormedSpace s = builtin_space("stadium");
  ConvexityReport r = strict_convexity_probe(s);
  ASSERT_EQ(r.verdict, ConvexityVerdict::FlatFound);
  const FlatWitness& w = *r.flat_witness;
  expect_on_sphere(s, w);
  EXPECT_NEAR(std::abs(w.u[1]), 1.0, 1e-9);
  EXPECT_NEAR(w.u[1], w.v[1], 1e-9);
}

TEST(ConvexityProbe, GaugesWithSegments) {
  for (const char* name : {"quartic_cubic", "l1"}) {
    NormedSpace s = builtin_space(name);
    ConvexityReport r = strict_convexity_probe(s);
    ASSERT_EQ(r.verdict, ConvexityVerdict::FlatFound) << name;
    expect_on_sphere(s, *r.flat_witness);
  }
}

TEST(ConvexityProbe, StrictlyConvexPlanes) {
  for (const char* name : {"l2", "lp:1.5", "lp:3", "lp:4"}) {
    ConvexityReport r = strict_convexity_probe(builtin_space(name));
    EXPECT_EQ(r.verdict, ConvexityVerdict::NoFlatFound) << name;
    EXPECT_FALSE(r.flat_witness) << name;
  }
}

TEST(ConvexityProbe, L3InR3) {
  NormedSpace s = NormedSpace::lp(3.0, 3);
  ConvexityReport r = strict_convexity_probe(s, 100000, 1e-9, 0.1);
  EXPECT_EQ(r.verdict, ConvexityVerdict::NoFlatFound);
  EXPECT_EQ(r.samples_used, 100000u);
  EXPECT_LT(r.max_midpoint_norm, 1.0 - 5e-5);
}

TEST(ConvexityProbe, LinfInR3) {
  NormedSpace s = NormedSpace::lp(kInf, 3);
  ConvexityReport r = strict_convexity_probe(s);
  ASSERT_EQ(r.verdict, ConvexityVerdict::FlatFound);
  expect_on_sphere(s, *r.flat_witness);
}

TEST(ConvexityProbe, Deterministic) {
  NormedSpace s = NormedSpace::lp(4.0, 3);
  ConvexityReport a = strict_convexity_probe(s, 5000, 1e-9, 1e-3);
  ConvexityReport b = strict_convexity_probe(s, 5000, 1e-9, 1e-3);
  EXPECT_EQ(a.max_midpoint_norm, b.max_midpoint_norm);
  EXPECT_EQ(a.candidates_checked, b.candidates_checked);
}

TEST(Modulus, Examples) {
  NormedSpace l2 = NormedSpace::lp(2.0, 2);
  EXPECT_NEAR(modulus_of_convexity(l2, 2.0, 2000), 1.0, 1e-6);
  EXPECT_NEAR(modulus_of_convexity(l2, 1.0, 2000), 1.0 - std::sqrt(3.0) / 2.0, 1e-6);
  EXPECT_NEAR(modulus_of_convexity(NormedSpace::lp(kInf, 2), 1.0, 2000), 0.0, 1e-9);
}

TEST(Modulus, EuclideanClosedFormAcrossEpsilon) {
  NormedSpace l2 = NormedSpace::lp(2.0, 2);
  for (double e : {0.1, 0.5, 1.3, 1.9}) {
    EXPECT_NEAR(modulus_of_convexity(l2, e, 1000), 1.0 - std::sqrt(1.0 - e * e / 4.0), 1e-6) << e;
  }
  NormedSpace l2d3 = NormedSpace::lp(2.0, 3);
  EXPECT_NEAR(modulus_of_convexity(l2d3, 1.0, 500), 1.0 - std::sqrt(3.0) / 2.0, 1e-6);
}

TEST(Modulus, Properties) {
  std::vector<double> eps{0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
  for (const std::string& name : builtin_suite()) {
    NormedSpace s = builtin_space(name);
    auto m = modulus_samples(s, eps, 1000);
    ASSERT_EQ(m.size(), eps.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
      double e = m[k].first, d = m[k].second;
      EXPECT_GE(d, -1e-12) << name << " " << e;
      // no space is more convex than the Euclidean plane
      EXPECT_LE(d, 1.0 - std::sqrt(1.0 - e * e / 4.0) + 1e-6) << name << " " << e;
      if (k > 0) EXPECT_GE(d, m[k - 1].second - 1e-9) << name << " " << e;
    }
    bool strictly = s.p() && *s.p() > 1.0 && std::isfinite(*s.p());
    if (strictly) {
      for (auto& [e, d] : m) EXPECT_GT(d, 0.0) << name << " " << e;
    }
  }
}

TEST(Modulus, FlatSpacesAtTwo) {
  // δ(2) = 1 − L/2 for the longest segment L on the sphere
  EXPECT_NEAR(modulus_of_convexity(NormedSpace::lp(kInf, 2), 2.0, 1000), 0.0, 1e-9);
  EXPECT_NEAR(modulus_of_convexity(NormedSpace::lp(1.0, 2), 2.0, 1000), 0.0, 1e-9);
  EXPECT_NEAR(modulus_of_convexity(builtin_space("stadium"), 2.0, 1000), 1.0 - std::numbers::sqrt2 / 2.0, 1e-6);
}

TEST(Modulus, Errors) {
  NormedSpace l2 = NormedSpace::lp(2.0, 2);
  EXPECT_THROW(modulus_of_convexity(l2, 0.0, 100), InvalidArgument);
  EXPECT_THROW(modulus_of_convexity(l2, 2.5, 100), InvalidArgument);
}

TEST(FlatConstruction, LinfEdge) {
  NormedSpace s = NormedSpace::lp(kInf, 2);
  FlatConstruction c = flat_segment_orthogonality_construction(s, Vector{1.0, 1.0}, Vector{-1.0, 1.0});
  EXPECT_EQ(c.x, (Vector{0.0, 1.0}));
  EXPECT_EQ(c.y, (Vector{-2.0, 0.0}));
  EXPECT_EQ(c.verdict.relation, Relation::BirkhoffOnly);
  EXPECT_LE(c.verdict.min_result.flat_interval.lo, -0.5 + 1e-6);
  EXPECT_GE(c.verdict.min_result.flat_interval.hi, 0.5 - 1e-6);
}

TEST(FlatConstruction, Stadium) {
  NormedSpace s = builtin_space("stadium");
  FlatConstruction c = flat_segment_orthogonality_construction(s, Vector{-1.0, 1.0}, Vector{1.0, 1.0});
  EXPECT_EQ(c.x, (Vector{0.0, 1.0}));
  EXPECT_EQ(c.y, (Vector{2.0, 0.0}));
  EXPECT_EQ(c.verdict.relation, Relation::BirkhoffOnly);
  EXPECT_NEAR(c.verdict.min_result.flat_interval.lo, -0.5, 1e-6);
  EXPECT_NEAR(c.verdict.min_result.flat_interval.hi, 0.5, 1e-6);
}

TEST(FlatConstruction, EuclideanRejected) {
  NormedSpace s = NormedSpace::lp(2.0, 2);
  EXPECT_THROW(flat_segment_orthogonality_construction(s, Vector{1.0, 0.0}, Vector{0.0, 1.0}), PreconditionFailed);
  EXPECT_THROW(flat_segment_orthogonality_construction(s, Vector{2.0, 0.0}, Vector{0.0, 1.0}), PreconditionFailed);
}

TEST(FlatConstruction, EveryProbeWitnessGivesBirkhoffOnly) {
  for (const std::string& name : builtin_suite()) {
    NormedSpace s = builtin_space(name);
    ConvexityReport r = strict_convexity_probe(s);
    if (!r.flat_witness) continue;
    FlatConstruction c = flat_segment_orthogonality_construction(s, r.flat_witness->u, r.flat_witness->v);
    EXPECT_EQ(c.verdict.relation, Relation::BirkhoffOnly) << name;
  }
}
