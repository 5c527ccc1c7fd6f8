#pragma once

// Planar star-shaped boundaries and the angle -> radius lookup that turns
// them into gauge functions.

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace mgeo {

using Point2 = std::array<double, 2>;

/// Arc of an implicit curve, traversed from x_begin to x_end on branch
/// sign(y) = branch.
///
/// Supported equations:
///   "superellipse"  params = {p}            |x|^p + |y|^p = 1
///   "poly"          params = {c, i, j, ...}  sum c * x^i * y^j = 1   (i + j >= 1)
/// Superellipse arcs use closed forms; poly arcs are solved by bisection.
struct ImplicitArc {
  std::string equation;
  std::vector<double> params;
  double x_begin = 0.0;
  double x_end = 0.0;
  int branch = 1;
};

/// Arc of the origin-centred circle of the given radius, angles in radians,
/// angle_begin < angle_end.
struct CircularArc {
  double radius = 1.0;
  double angle_begin = 0.0;
  double angle_end = 0.0;
};

struct SegmentArc {
  Point2 from{};
  Point2 to{};
};

/// Horizontal segment y = y_level from x_begin to x_end.
struct FlatLine {
  double y_level = 1.0;
  double x_begin = 0.0;
  double x_end = 0.0;
};

using GaugePiece = std::variant<ImplicitArc, CircularArc, SegmentArc, FlatLine>;

/// Pieces are listed counter-clockwise and chain end-to-start. With
/// symmetric = true they describe half of the curve; the other half is the
/// reflection through the origin.
struct Gauge2DBoundary {
  std::vector<GaugePiece> pieces;
  bool symmetric = true;
};

Point2 piece_begin(const GaugePiece& piece);
Point2 piece_end(const GaugePiece& piece);

/// Radius lookup for a validated boundary. Immutable after construction.
///
/// A 4096-bin angular table maps each bin to the first piece whose angular
/// range meets it; the radius itself is then computed exactly on that piece
/// (closed form, or bisection for "poly" arcs).
class GaugeTable {
 public:
  static constexpr std::size_t kTableSize = 4096;
  static constexpr double kClosureTol = 1e-9;

  /// Throws MalformedBoundary if the pieces do not close up or the curve is
  /// not star-shaped about the origin.
  explicit GaugeTable(Gauge2DBoundary boundary);

  const Gauge2DBoundary& boundary() const { return boundary_; }

  /// Boundary radius along the ray at angle theta.
  double radius(double theta) const;

  /// Gauge value |v| / radius(angle(v)); 0 at the origin. For symmetric
  /// boundaries value(-x, -y) == value(x, y) bit for bit.
  double value(double x, double y) const;

  /// Angle of the first piece's starting point.
  double start_angle() const { return start_angle_; }

 private:
  struct Range {
    double lo;  // offsets from start_angle_
    double hi;
  };

  std::size_t locate(double offset) const;
  double radius_on_piece(std::size_t piece, double theta) const;

  Gauge2DBoundary boundary_;
  std::vector<Range> ranges_;
  std::vector<std::size_t> bins_;
  double start_angle_ = 0.0;
  double sweep_ = 0.0;
  Point2 start_dir_{};
};

struct GaugeConvexityReport {
  bool passed = true;
  double worst_cross = 0.0;             // most negative normalized turn
  std::array<double, 3> witness_angles{};  // offending consecutive samples
  std::size_t samples = 0;
};

/// Walks the closed polyline sampled every angular_step radians and checks
/// that consecutive edges always turn the same way (zeros allowed).
/// Throws MalformedBoundary for boundaries GaugeTable rejects and
/// InvalidArgument for a non-positive step.
GaugeConvexityReport validate_gauge_convexity(const Gauge2DBoundary& boundary, double angular_step);

}  // namespace mgeo
