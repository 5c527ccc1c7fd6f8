#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mgeo/gauge.hpp"
#include "mgeo/vector.hpp"

namespace mgeo {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// The standard p-norm; p = kInf is the max norm.
struct PNorm {
  double p = 2.0;
};

/// max over functionals f of |<f, v>|.
struct Polyhedral {
  std::vector<Vector> functionals;
};

/// Gauge of a star-shaped planar body given by its boundary.
struct Gauge2D {
  std::shared_ptr<const GaugeTable> table;
};

using NormForm = std::variant<PNorm, Polyhedral, Gauge2D>;

/// A finite-dimensional real normed space. Immutable; cheap to copy.
class NormedSpace {
 public:
  static NormedSpace lp(double p, std::size_t dim);
  static NormedSpace polyhedral(std::vector<Vector> functionals);
  /// Does not check convexity; see validate_gauge_convexity.
  static NormedSpace gauge(Gauge2DBoundary boundary, std::string name = "gauge2d");

  std::size_t dim() const { return dim_; }
  const NormForm& form() const { return form_; }
  const std::string& name() const { return name_; }
  NormedSpace with_name(std::string name) const;

  bool is_gauge() const { return std::holds_alternative<Gauge2D>(form_); }
  bool is_polyhedral() const { return std::holds_alternative<Polyhedral>(form_); }
  /// p for PNorm spaces.
  std::optional<double> p() const;

  /// Unchecked evaluation; coords.size() must equal dim().
  double norm(std::span<const double> coords) const;

 private:
  NormedSpace(std::size_t dim, NormForm form, std::string name);

  std::size_t dim_;
  NormForm form_;
  std::string name_;
};

/// Checked evaluation: dimension and finiteness are validated.
double eval_norm(const NormedSpace& space, const Vector& v);

/// v / ||v||; throws InvalidArgument for the zero vector.
Vector normalize(const NormedSpace& space, const Vector& v);

/// The unit-sphere point on the ray at angle theta (dim 2 only).
Vector sphere_point_2d(const NormedSpace& space, double theta);

/// Builtin spaces: "stadium", "quartic_cubic", "linf", "l1", "l2" and
/// "lp:<p>" (p may be "inf"). dim applies to the p-norm family; the two
/// gauges are planar.
NormedSpace builtin_space(std::string_view name, std::size_t dim = 2);

Gauge2DBoundary stadium_boundary();
Gauge2DBoundary quartic_cubic_boundary();

std::vector<std::string> builtin_names();

/// Concrete planar spaces used by the property suites.
std::vector<std::string> builtin_suite();

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  double worst_violation = 0.0;
  std::vector<Vector> witness;  // empty when passed
};

struct NormValidationReport {
  bool passed = true;
  std::size_t samples = 0;
  std::vector<AxiomCheck> axioms;  // homogeneity, triangle, positive_definite
};

/// Random-sample check of the norm axioms. Violations are relative:
/// homogeneity |‖αv‖ − |α|‖v‖| / max(1, |α|‖v‖), triangle
/// (‖u+v‖ − ‖u‖ − ‖v‖) / max(1, ‖u‖ + ‖v‖).
NormValidationReport validate_norm(const NormedSpace& space, std::size_t sample_count, double tol,
                                   std::uint64_t seed = 1);

}  // namespace mgeo
