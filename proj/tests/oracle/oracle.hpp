#pragma once

// Brute-force reference routines for the test suites. Deliberately slow and
// independent of the optimized code paths: no golden sections, no bisection
// on difference quotients, no cached inverses.

#include <cstddef>
#include <vector>

#include "mgeo/space.hpp"
#include "mgeo/vector.hpp"

namespace mgeo::oracle {

struct GridSpec {
  double lo = -4.0;
  double hi = 4.0;
  int steps = 10000;
  int refinement_rounds = 3;
};

struct GridMin {
  double argmin = 0.0;
  double min_value = 0.0;
  // Coarse-grid points within 1e-12 of the coarse minimum.
  double flat_lo = 0.0;
  double flat_hi = 0.0;
  long evaluations = 0;
};

/// f(λ) = ‖x + λy‖ on a uniform grid, then 10x zooms around the best cell.
GridMin grid_min(const NormedSpace& space, const Vector& x, const Vector& y, const GridSpec& grid = {});

struct ClosedFormMin {
  double argmin = 0.0;  // midpoint of [lo, hi]
  double min_value = 0.0;
  double lo = 0.0;      // minimizer set
  double hi = 0.0;
};

/// p in {1, 2, inf}. Throws InvalidArgument otherwise.
ClosedFormMin closed_form_lp_min(double p, const Vector& x, const Vector& y);

struct SweepMax {
  double value = 0.0;
  double theta = 0.0;
};

/// max over the planar unit sphere of the i-th coefficient w.r.t. {b0, b1},
/// by a 0.01 degree sweep plus a fine local sweep around the best angle.
SweepMax sweep_max_coefficient(const NormedSpace& space, const Vector& b0, const Vector& b1, std::size_t i);

struct CompanionRange {
  double phi_lo = 0.0;
  double phi_hi = 0.0;
  std::size_t hits = 0;
  // Grid angle with the smallest drop of min f below ‖x‖; a smooth point's
  // single companion usually falls between grid angles.
  double phi_best = 0.0;
};

/// Angles φ in (θ_x, θ_x + π) whose sphere point y(φ) satisfies x ⊥_B y by
/// grid_min, sampled at `samples` angles. Assumes the hits form one arc.
CompanionRange companion_range(const NormedSpace& space, const Vector& x, std::size_t samples = 3600,
                               double tol = 1e-9);

}  // namespace mgeo::oracle
