#pragma once

#include <functional>
#include <string>

#include "mgeo/space.hpp"

namespace mgeo {

/// Tolerances for the line function f(λ) = ‖x + λy‖. Value tolerances are
/// relative to ‖x‖ and argument tolerances relative to ‖x‖/‖y‖, so every
/// verdict is invariant under rescaling x and y.
struct Tolerances {
  double value = 1e-9;  // Birkhoff test: min f >= ‖x‖ (1 - value)
  double arg = 1e-6;    // widest minimizer set still read as a single point
  double flat = 1e-9;   // sublevel level used to measure the minimizer set
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  /// Signed distance from 0: 0 if the interval contains 0, else the
  /// endpoint nearest 0.
  double offset_from_zero() const { return contains(0.0) ? 0.0 : (lo > 0.0 ? lo : hi); }
};

struct MinimizationResult {
  double argmin = 0.0;
  double min_value = 0.0;
  /// Estimated minimizer set: the core when the minimum is genuinely flat,
  /// else the single point [argmin, argmin].
  Interval flat_interval;
  /// Raw sublevel set {f <= min + flat·‖x‖}.
  Interval sublevel;
  /// Sublevel set at 1e-4 of that level; equal to `sublevel` (up to the
  /// edges) on a genuine flat, much narrower at a curved minimum.
  Interval core;
  bool genuinely_flat = false;
  int evaluations = 0;
  Tolerances tolerances;
  double bracket = 0.0;  // |λ| <= bracket encloses every minimizer
  bool convexity_violation = false;
};

using ProbeFn = std::function<void(double lambda, double value)>;

/// Minimizes λ ↦ ‖x + λy‖ over the reals.
///
/// f is convex, and outside |λ| <= 2‖x‖/‖y‖ it exceeds ‖x‖ = f(0), so a
/// golden-section search on that bracket finds a global minimizer. The
/// minimizer set is then measured by bisecting outwards to the edges of the
/// sublevel set at two levels (flat and flat·1e-4). A true flat interval has
/// the same extent at both levels; a curved minimum of contact order q shrinks
/// by a factor 1e-4^(1/q). The minimum counts as genuinely flat when the
/// core keeps at least 80% of the sublevel width.
/// A flat seen through a slightly rotated y tilts instead, so the core slides
/// to one end; it is still accepted when f is affine across the interior of
/// the sublevel set, and the minimizer set is then the extent of that line.
///
/// Throws InvalidArgument for zero x or y, DimensionMismatch on dim errors.
MinimizationResult directional_min(const NormedSpace& space, const Vector& x, const Vector& y,
                                   const Tolerances& tol = {}, const ProbeFn& probe = {});

/// Value-only variant (no sublevel measurement); about a quarter of the cost.
double directional_min_value(const NormedSpace& space, const Vector& x, const Vector& y);

bool is_birkhoff(const NormedSpace& space, const Vector& x, const Vector& y, const Tolerances& tol = {});
bool is_strongly_birkhoff(const NormedSpace& space, const Vector& x, const Vector& y,
                          const Tolerances& tol = {});

enum class Relation { NotOrthogonal, BirkhoffOnly, StronglyBirkhoff };

std::string to_string(Relation r);

struct OrthogonalityVerdict {
  Relation relation = Relation::NotOrthogonal;
  MinimizationResult min_result;
  /// NotOrthogonal: a λ with ‖x+λy‖ < ‖x‖ − tol. BirkhoffOnly: a λ ≠ 0 inside
  /// the flat interval. StronglyBirkhoff: 0.
  double witness = 0.0;
  double witness_value = 0.0;
  double norm_x = 0.0;
};

OrthogonalityVerdict classify(const NormedSpace& space, const Vector& x, const Vector& y,
                              const Tolerances& tol = {});

/// The set of Birkhoff companions of a unit x in a plane, as an arc of
/// angles [phi_lo, phi_hi] inside (θ_x, θ_x + π).
struct CompanionArc {
  double theta_x = 0.0;
  double phi_lo = 0.0;
  double phi_hi = 0.0;
  double phi = 0.0;  // midpoint
  Vector y{0.0, 0.0};  // sphere_point_2d(phi)
  /// False at a corner of the sphere, where a whole arc of companions exists.
  bool unique = true;
};

/// Locates the companion arc by bisection on the signs of the one-sided
/// difference quotients of f_φ(λ) = ‖x + λ·y(φ)‖ at λ = ±1e-6: the left
/// quotient turns non-positive at phi_lo and the right quotient turns
/// negative after phi_hi. Finite differencing smears a single companion over
/// an arc that shrinks with the step; a corner's arc does not. The arc is
/// therefore re-measured at step 1e-8 and counted as unique when it shrinks
/// by half or more (or is already narrower than 1e-7).
CompanionArc companion_arc_2d(const NormedSpace& space, const Vector& x);

/// Midpoint of companion_arc_2d.
Vector orthogonal_companion_2d(const NormedSpace& space, const Vector& x);

/// Angle of a planar vector in [0, 2π).
double angle_of(const Vector& v);

}  // namespace mgeo
