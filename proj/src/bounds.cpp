#include "mgeo/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "mgeo/error.hpp"
#include "mgeo/numeric.hpp"
#include "mgeo/orthogonality.hpp"

namespace mgeo {
namespace {

constexpr double kEnvelopeSlack = 1e-9;
constexpr double kUnitTol = 1e-9;
constexpr double kBirkhoffTol = 1e-7;

void check_pair(const NormedSpace& space, const Vector& x, const Vector& y) {
  require_same_dim(x, y, "bounds");
  if (x.dim() != space.dim()) throw DimensionMismatch("bounds: vector dimension does not match the space");
  if (std::abs(eval_norm(space, x) - 1.0) > kUnitTol || std::abs(eval_norm(space, y) - 1.0) > kUnitTol) {
    throw PreconditionFailed("bounds: x and y must be unit vectors");
  }
  Tolerances tol;
  tol.value = kBirkhoffTol;
  if (directional_min(space, x, y, tol).min_value < 1.0 - kBirkhoffTol) {
    throw PreconditionFailed("bounds: x is not Birkhoff orthogonal to y");
  }
}

}  // namespace

std::string to_string(CompanionRole r) {
  switch (r) {
    case CompanionRole::Midpoint: return "midpoint";
    case CompanionRole::ArcLow: return "arc_low";
    case CompanionRole::ArcHigh: return "arc_high";
    case CompanionRole::Supplied: return "supplied";
  }
  return "?";
}

SegmentMin segment_min(const NormedSpace& space, const Vector& x, const Vector& y) {
  check_pair(space, x, y);
  SegmentMin r;
  std::vector<double> buf(x.dim());
  auto f = [&](double t) {
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = t * x[i] + (1.0 - t) * y[i];
    return space.norm(buf);
  };
  auto probe = [&](double t, double v) {
    if (v < std::max(std::abs(2.0 * t - 1.0), t) - kEnvelopeSlack) r.envelope_ok = false;
  };
  auto g = numeric::golden_section(f, 0.0, 1.0, 1e-10, 1e-12, probe);
  r.t = g.x;
  r.value = g.fx;
  r.evaluations = g.evaluations;
  for (double t : {0.0, 1.0}) {
    double v = f(t);
    probe(t, v);
    if (v < r.value) {
      r.value = v;
      r.t = t;
    }
  }
  r.evaluations += 2;
  return r;
}

LineMin line_min(const NormedSpace& space, const Vector& x, const Vector& y) {
  check_pair(space, x, y);
  LineMin r;
  auto probe = [&](double l, double v) {
    double env = std::max(std::abs(l), std::abs(1.0 - std::abs(l)));
    if (v < env - kEnvelopeSlack) r.envelope_ok = false;
  };
  MinimizationResult m = directional_min(space, y, x, Tolerances{}, probe);
  r.lambda = m.argmin;
  r.value = m.min_value;
  r.evaluations = m.evaluations;
  probe(r.lambda, r.value);
  return r;
}

namespace {

BoundsRecord make_record(const NormedSpace& space, std::size_t index, double theta, CompanionRole role,
                         const Vector& x, const Vector& y) {
  BoundsRecord rec;
  rec.index = index;
  rec.theta = theta;
  rec.role = role;
  rec.x = x;
  rec.y = y;
  rec.segment = segment_min(space, x, y);
  rec.line = line_min(space, x, y);
  rec.space = space.name();
  rec.segment_floor_ok = rec.segment.value >= kSegmentFloor - 1e-9;
  rec.line_floor_ok = rec.line.value >= kLineFloor - 1e-9;
  return rec;
}

BoundsSummary summarize(const std::vector<BoundsRecord>& records) {
  BoundsSummary s;
  s.records = records.size();
  s.min_segment = kInf;
  s.min_line = kInf;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& r = records[k];
    if (r.segment.value < s.min_segment) {
      s.min_segment = r.segment.value;
      s.min_segment_record = k;
    }
    if (r.line.value < s.min_line) {
      s.min_line = r.line.value;
      s.min_line_record = k;
    }
    if (!r.segment_floor_ok) ++s.segment_floor_violations;
    if (!r.line_floor_ok) ++s.line_floor_violations;
    if (!r.segment.envelope_ok || !r.line.envelope_ok) ++s.envelope_violations;
  }
  return s;
}

}  // namespace

BoundsSurvey bounds_survey(const NormedSpace& space, std::size_t num_points) {
  if (space.dim() != 2) throw DimensionMismatch("bounds_survey: planar grid survey needs a 2-D space");
  if (num_points < 1) throw InvalidArgument("bounds_survey: num_points must be >= 1");
  std::vector<std::vector<BoundsRecord>> slots(num_points);
  numeric::parallel_for(num_points, [&](std::size_t k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(num_points);
    Vector x = sphere_point_2d(space, theta);
    CompanionArc arc = companion_arc_2d(space, x);
    auto& out = slots[k];
    out.push_back(make_record(space, k, theta, CompanionRole::Midpoint, x, arc.y));
    if (!arc.unique) {
      out.push_back(make_record(space, k, theta, CompanionRole::ArcLow, x, sphere_point_2d(space, arc.phi_lo)));
      out.push_back(make_record(space, k, theta, CompanionRole::ArcHigh, x, sphere_point_2d(space, arc.phi_hi)));
    }
  });
  BoundsSurvey s;
  for (auto& v : slots) {
    for (auto& r : v) s.records.push_back(std::move(r));
  }
  s.summary = summarize(s.records);
  return s;
}

BoundsSurvey bounds_survey(const NormedSpace& space, const std::vector<std::pair<Vector, Vector>>& pairs) {
  std::vector<std::optional<BoundsRecord>> slots(pairs.size());
  numeric::parallel_for(pairs.size(), [&](std::size_t k) {
    slots[k] = make_record(space, k, 0.0, CompanionRole::Supplied, pairs[k].first, pairs[k].second);
  });
  BoundsSurvey s;
  for (auto& r : slots) s.records.push_back(std::move(*r));
  s.summary = summarize(s.records);
  return s;
}

}  // namespace mgeo
