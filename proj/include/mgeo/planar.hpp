#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgeo/orthogonality.hpp"
#include "mgeo/space.hpp"

namespace mgeo {

enum class Strength { Conjugate, StronglyConjugate };

std::string to_string(Strength s);

struct DiameterPair {
  double theta_x = 0.0;
  double theta_y = 0.0;
  Vector x{0.0, 0.0};
  Vector y{0.0, 0.0};
  double residual_xy = 0.0;  // |offset of argmin λ of ‖x + λy‖ from 0|
  double residual_yx = 0.0;
  Strength strength = Strength::Conjugate;
  /// The companion used to build the pair was not unique (corner point).
  bool non_smooth = false;
};

/// Builds the pair (x, y), measuring residuals and strength. Does not check
/// that the residuals are within any tolerance.
DiameterPair make_diameter_pair(const NormedSpace& space, const Vector& x, const Vector& y,
                                const Tolerances& tol = {});

struct ConjugateSearch {
  std::vector<DiameterPair> pairs;
  /// Every grid point gave a conjugate pair (the search then returns the
  /// grid pairs themselves).
  bool all_conjugate = false;
  /// Some grid point had a non-unique companion.
  bool non_smooth_caveat = false;
  std::size_t grid_size = 0;
};

/// Conjugate diameters via the back residual h(θ) of the midpoint companion.
/// Sign changes of h are refined by bisection; brackets whose refined
/// residual exceeds tol are discarded as jumps. Throws Error when nothing is
/// found.
ConjugateSearch find_conjugate_diameters(const NormedSpace& space, std::size_t grid_size = 720, double tol = 1e-6,
                                         const Tolerances& ctol = {});

struct RadonResult {
  bool radon = false;
  double max_residual = 0.0;
  double witness_theta = 0.0;
  Vector witness_x{0.0, 0.0};
  Vector witness_y{0.0, 0.0};
  /// The sphere has corners on the grid; the verdict is then advisory.
  bool non_smooth_caveat = false;
  std::size_t grid_size = 0;
};

RadonResult is_radon(const NormedSpace& space, std::size_t grid_size = 720, double tol = 1e-6);

struct PairScanReport {
  std::vector<DiameterPair> conjugate_pairs;  // mutually Birkhoff, either strength
  std::size_t strongly_conjugate = 0;         // of which StronglyConjugate
  std::size_t grid_size = 0;
  std::size_t near_hits = 0;
  std::size_t refined = 0;
  double resolution_deg = 0.0;
};

struct PairScanOptions {
  double value_tol = 1e-9;
  double arg_tol = 1e-6;
  std::size_t max_refinements = 256;
  int refinement_rounds = 17;
};

/// Scans all diameter pairs on a grid over [0, π)², using the residual
/// R = max of the relative drops of ‖x + λy‖ and ‖y + λx‖ below 1. Grid local
/// minima with small R are refined along the companion arcs: for x(t) near
/// either grid angle, the partner y is the point of the companion arc of x
/// with the smallest back drop, and t is zoomed in on by shrinking 21-point
/// grids. Refined pairs are classified in both directions and de-duplicated.
PairScanReport exhaustive_pair_scan(const NormedSpace& space, double resolution_deg = 0.25,
                                    const PairScanOptions& opts = {});

struct GeneralizedConjugateResult {
  bool verdict = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;  // (i, j): d_i not ⊥_B d_j
};

/// All ordered pairs of the n = dim directions must be Birkhoff orthogonal.
/// Throws PreconditionFailed for a wrong count or a dependent pair.
GeneralizedConjugateResult generalized_conjugate_check(const NormedSpace& space, const std::vector<Vector>& diameters,
                                                       const Tolerances& tol = {});

struct CrosscheckReport {
  bool skipped = false;
  bool hypothesis_verified = false;
  std::size_t checked = 0;
  std::vector<DiameterPair> disagreements;
};

/// For each StronglyConjugate pair from find_conjugate_diameters, checks that
/// the pair (as a basis) passes strongly_orthonormal_direct. Skipped when the
/// convexity probe finds a flat.
CrosscheckReport conjugate_basis_crosscheck(const NormedSpace& space, std::size_t grid_size = 360, double tol = 1e-6);

}  // namespace mgeo
