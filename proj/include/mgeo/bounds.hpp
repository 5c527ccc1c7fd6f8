#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mgeo/space.hpp"

namespace mgeo {

inline constexpr double kSegmentFloor = 1.0 / 3.0;
inline constexpr double kLineFloor = 0.5;

struct SegmentMin {
  double t = 0.0;
  double value = 0.0;
  /// Every probe satisfied f(t) >= max(|2t − 1|, t) − 1e-9.
  bool envelope_ok = true;
  int evaluations = 0;
};

struct LineMin {
  double lambda = 0.0;
  double value = 0.0;
  /// Every probe satisfied ‖y + λx‖ >= max(|λ|, |1 − |λ||) − 1e-9.
  bool envelope_ok = true;
  int evaluations = 0;
};

/// min over t in [0, 1] of ‖tx + (1 − t)y‖ for unit x ⊥_B y.
/// Throws PreconditionFailed for non-unit inputs or when x is not
/// Birkhoff orthogonal to y at value tolerance 1e-7.
SegmentMin segment_min(const NormedSpace& space, const Vector& x, const Vector& y);

/// min over λ of ‖y + λx‖ for unit x ⊥_B y (same preconditions).
LineMin line_min(const NormedSpace& space, const Vector& x, const Vector& y);

/// Which point of the companion arc of x supplied y.
enum class CompanionRole { Midpoint, ArcLow, ArcHigh, Supplied };

std::string to_string(CompanionRole r);

struct BoundsRecord {
  std::size_t index = 0;  // grid index (or position in the supplied list)
  double theta = 0.0;     // angle of x; 0 for supplied pairs
  CompanionRole role = CompanionRole::Midpoint;
  Vector x{0.0};
  Vector y{0.0};
  SegmentMin segment;
  LineMin line;
  std::string space;
  bool segment_floor_ok = true;  // segment.value >= 1/3 − 1e-9
  bool line_floor_ok = true;     // line.value >= 1/2 − 1e-9
};

struct BoundsSummary {
  std::size_t records = 0;
  double min_segment = 0.0;
  std::size_t min_segment_record = 0;
  double min_line = 0.0;
  std::size_t min_line_record = 0;
  std::size_t segment_floor_violations = 0;
  std::size_t line_floor_violations = 0;
  std::size_t envelope_violations = 0;
};

struct BoundsSurvey {
  std::vector<BoundsRecord> records;
  BoundsSummary summary;
};

/// Planar survey: x walks a uniform grid of num_points angles in [0, 2π)
/// and y is the orthogonal companion. Where the companion is not unique the
/// two arc ends are surveyed as well as the midpoint.
BoundsSurvey bounds_survey(const NormedSpace& space, std::size_t num_points = 720);

/// Survey over caller-supplied pairs (any dimension).
BoundsSurvey bounds_survey(const NormedSpace& space, const std::vector<std::pair<Vector, Vector>>& pairs);

}  // namespace mgeo
