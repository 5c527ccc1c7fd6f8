#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgeo/space.hpp"

namespace mgeo {

/// m unit vectors spanning an m-dimensional space, with the inverse
/// coordinate map precomputed. Indices are 0-based throughout.
class Basis {
 public:
  /// Throws InvalidArgument when the count differs from space.dim(), a
  /// vector is not unit (±1e-10), or the smallest singular value of the
  /// coordinate matrix is at most 1e-10.
  Basis(const NormedSpace& space, std::vector<Vector> vectors);

  static Basis standard(const NormedSpace& space);

  std::size_t size() const { return vectors_.size(); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const Vector& operator[](std::size_t i) const { return vectors_.at(i); }

  /// i-th coefficient of w in this basis.
  double coefficient(std::span<const double> w, std::size_t i) const;
  std::vector<double> coefficients(const Vector& w) const;
  /// Row i of the inverse coordinate matrix (the i-th coordinate functional).
  Vector functional(std::size_t i) const;

 private:
  std::vector<Vector> vectors_;
  std::vector<double> inverse_;  // row-major m×m
};

struct MaxCoefficient {
  std::size_t index = 0;
  double value = 0.0;
  Vector maximizer{0.0};
  /// False when the budget ran out before the step size collapsed.
  bool converged = true;
  long evaluations = 0;
};

inline constexpr long kDefaultBudget = 2'000'000;

/// max over the unit sphere of the i-th coefficient, computed as the max of
/// the ratio α_i(w)/‖w‖ by multistart pattern ascent (axis moves plus random
/// directions, halving steps). Planar spaces also run an angle sweep.
MaxCoefficient max_coefficient(const NormedSpace& space, const Basis& basis, std::size_t i,
                               long budget = kDefaultBudget, std::uint64_t seed = 1);

struct UniquenessResult {
  bool unique = true;
  std::optional<Vector> witness;  // second maximizer when not unique
  std::size_t samples = 0;
};

/// Looks for a second unit vector with i-th coefficient >= max_Si − 1e-7 at
/// distance >= 1e-3 from the maximizer. Such vectors lie on the face of the
/// ball cut by the supporting hyperplane α_i = max_Si, so the probe follows
/// sampled directions d in the kernel of α_i and asks classify(maximizer, d)
/// whether the sphere is flat along d.
UniquenessResult uniqueness_probe(const NormedSpace& space, const Basis& basis, std::size_t i, double max_si,
                                  const Vector& maximizer, std::size_t num_samples = 1000,
                                  std::uint64_t seed = 1);

struct DirectIndexResult {
  std::size_t index = 0;
  double min_value = 0.0;               // min of ‖e_i + Σ_{j≠i} λ_j e_j‖
  std::vector<double> min_lambda;       // coefficients λ_j, j ≠ i, in index order
  bool flat = false;                    // a λ ≠ 0 with value ≈ 1 exists
  std::vector<double> flat_lambda;      // such a λ when flat
  bool strongly_orthogonal = true;
};

struct DirectResult {
  bool verdict = true;
  std::vector<DirectIndexResult> per_index;
  std::optional<std::size_t> worst_index;  // first failing index
};

/// The definition: e_i must be strongly orthogonal to the span of the other
/// basis vectors for every i. verdict requires each minimum >= 1 − tol and
/// no coefficient vector λ with |λ| > arg_tol reaching value <= 1 + tol.
DirectResult strongly_orthonormal_direct(const NormedSpace& space, const Basis& basis, double tol = 1e-7,
                                         double arg_tol = 1e-6, std::uint64_t seed = 1,
                                         long budget = kDefaultBudget);

struct CriterionResult {
  bool verdict = true;
  std::vector<MaxCoefficient> max_coefficients;
  /// strict_convexity_probe reported NoFlatFound; without it only the
  /// necessity direction of the criterion is meaningful.
  bool hypothesis_verified = false;
};

/// true iff every max_Si <= 1 + tol.
CriterionResult strongly_orthonormal_criterion(const NormedSpace& space, const Basis& basis,
                                               long budget = kDefaultBudget, double tol = 1e-7,
                                               std::uint64_t seed = 1);

struct BasisIndexRecord {
  std::size_t index = 0;
  double max_si = 0.0;
  Vector maximizer{0.0};
  bool converged = true;
  bool unique = true;
  std::optional<Vector> uniqueness_witness;
};

struct BasisReport {
  std::string space;
  std::vector<Vector> basis;
  std::vector<BasisIndexRecord> per_index;
  bool verdict_direct = false;
  bool verdict_criterion = false;
  bool agreement = false;
  bool hypothesis_verified = false;
  DirectResult direct;
};

struct BasisOptions {
  double tol = 1e-7;
  double arg_tol = 1e-6;
  long budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::size_t uniqueness_samples = 1000;
};

BasisReport basis_report(const NormedSpace& space, const Basis& basis, const BasisOptions& opts = {});

}  // namespace mgeo
