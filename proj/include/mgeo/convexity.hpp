#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mgeo/orthogonality.hpp"
#include "mgeo/space.hpp"

namespace mgeo {

/// Sampling verdicts only: NoFlatFound is not a proof of strict convexity.
enum class ConvexityVerdict { NoFlatFound, FlatFound };

std::string to_string(ConvexityVerdict v);

struct FlatWitness {
  Vector u;
  Vector v;
  double midpoint_norm = 0.0;  // ‖(u+v)/2‖
  double separation = 0.0;     // ‖u − v‖
};

struct ConvexityReport {
  ConvexityVerdict verdict = ConvexityVerdict::NoFlatFound;
  std::optional<FlatWitness> flat_witness;
  std::vector<std::pair<double, double>> modulus_samples;  // (ε, δ̂(ε))
  std::size_t samples_used = 0;
  std::size_t candidates_checked = 0;
  /// Largest ‖(u+v)/2‖ seen over sep-separated unit pairs.
  double max_midpoint_norm = 0.0;
};

struct ConvexityProbeOptions {
  std::size_t num_samples = 10000;
  double tol = 1e-9;
  double sep = 1e-3;
  std::uint64_t seed = 1;
  std::size_t sweep_angles = 10000;  // planar sweep
  std::size_t max_candidates = 32;
};

/// Looks for unit pairs with ‖(u+v)/2‖ >= 1 − tol and ‖u − v‖ >= sep.
///
/// Random pairs are drawn in every dimension; planar spaces also get a
/// deterministic sweep pairing each of `sweep_angles` sphere points with
/// partners at doubling angular offsets. A candidate only counts once the
/// chord through it is confirmed flat: classify((u+v)/2, v − u) must report
/// a genuine flat interval. The witness is that whole flat piece, so near-
/// flat caps of high-order contact (ℓ4 near its axes) are not mistaken for
/// segments.
ConvexityReport strict_convexity_probe(const NormedSpace& space, const ConvexityProbeOptions& opts = {});

ConvexityReport strict_convexity_probe(const NormedSpace& space, std::size_t num_samples, double tol, double sep);

/// Sampled upper estimate of δ(ε) = inf{1 − ‖(x+y)/2‖ : ‖x‖ = ‖y‖ = 1, ‖x − y‖ >= ε}.
/// Planar spaces use num_samples angles; higher dimensions use num_samples
/// random 2-planes. In each plane the partner at distance exactly ε is found
/// by bisection along the sphere. At ε = 2 the estimate is 1 − L/2 for the
/// longest flat segment L confirmed by strict_convexity_probe.
double modulus_of_convexity(const NormedSpace& space, double epsilon, std::size_t num_samples,
                            std::uint64_t seed = 1);

/// δ̂ on several ε from one shared set of base points, so the estimates are
/// comparable across ε.
std::vector<std::pair<double, double>> modulus_samples(const NormedSpace& space, const std::vector<double>& eps,
                                                       std::size_t num_samples, std::uint64_t seed = 1);

struct FlatConstruction {
  Vector x;  // (u + v) / 2
  Vector y;  // v − u
  OrthogonalityVerdict verdict;
};

/// Given a segment [u, v] on the sphere, x = (u+v)/2 is Birkhoff- but not
/// strongly orthogonal to y = v − u. Throws PreconditionFailed when u or v is
/// not a unit vector or the midpoint norm is below 1 − tol.
FlatConstruction flat_segment_orthogonality_construction(const NormedSpace& space, const Vector& u,
                                                         const Vector& v, double tol = 1e-9);

}  // namespace mgeo
