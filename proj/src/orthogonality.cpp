#include "mgeo/orthogonality.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "mgeo/error.hpp"
#include "mgeo/numeric.hpp"

namespace mgeo {
namespace {

constexpr double kCoreFactor = 1e-4;
constexpr double kCoreKeep = 0.8;

/// λ ↦ ‖x + λy‖ with a reusable scratch buffer.
class LineFunction {
 public:
  LineFunction(const NormedSpace& space, const Vector& x, const Vector& y)
      : space_(space), x_(x.coords()), y_(y.coords()), buf_(x.dim()) {}

  double operator()(double lambda) {
    ++evaluations;
    for (std::size_t i = 0; i < buf_.size(); ++i) buf_[i] = x_[i] + lambda * y_[i];
    return space_.norm(buf_);
  }

  int evaluations = 0;

 private:
  const NormedSpace& space_;
  std::span<const double> x_;
  std::span<const double> y_;
  std::vector<double> buf_;
};

void check_pair(const NormedSpace& space, const Vector& x, const Vector& y) {
  if (x.dim() != space.dim() || y.dim() != space.dim()) {
    throw DimensionMismatch("orthogonality: vector dimension does not match the space");
  }
  if (x.is_zero() || y.is_zero()) throw InvalidArgument("orthogonality: x and y must be nonzero");
}

struct Search {
  double nx;
  double ny;
  double bracket;
  numeric::GoldenResult golden;
};

Search run_golden(const NormedSpace& space, LineFunction& f, const Vector& x, const Vector& y,
                  const ProbeFn& probe) {
  Search s;
  s.nx = space.norm(x.coords());
  s.ny = space.norm(y.coords());
  s.bracket = 2.0 * s.nx / s.ny;
  auto on_probe = [&](double l, double v) {
    if (probe) probe(l, v);
  };
  s.golden = numeric::golden_section(f, -s.bracket, s.bracket, 1e-12 * s.bracket, 1e-12 * s.nx, on_probe);
  // f(0) = ‖x‖ is always a candidate; it keeps Birkhoff pairs exact.
  double f0 = f(0.0);
  on_probe(0.0, f0);
  if (f0 <= s.golden.fx) {
    s.golden.fx = f0;
    s.golden.x = 0.0;
  }
  return s;
}

Interval sublevel_interval(LineFunction& f, double center, double level, double bracket) {
  auto inside = [&](double l) { return f(l) <= level; };
  const double xtol = 1e-15 * bracket;
  double lo = inside(-bracket) ? -bracket : numeric::bisect_boundary(inside, center, -bracket, xtol);
  double hi = inside(bracket) ? bracket : numeric::bisect_boundary(inside, center, bracket, xtol);
  return {lo, hi};
}

// A flat piece seen through a slightly rotated direction: f is affine, with
// a slope too small to leave the sublevel set, across the interior of the
// sublevel set. A curved minimum has second differences there of the order
// of the level itself.
std::optional<Interval> tilted_flat(LineFunction& f, const Interval& sub, double level) {
  const double h = sub.width() / 8.0;
  std::array<double, 7> v{};
  for (int k = 0; k < 7; ++k) v[k] = f(sub.lo + (k + 1) * h);
  for (int k = 1; k < 6; ++k) {
    if (std::abs(v[k - 1] - 2.0 * v[k] + v[k + 1]) > 1e-3 * level) return std::nullopt;
  }
  const double l1 = sub.lo + h;
  const double slope = (v[6] - v[0]) / (6.0 * h);
  auto on_line = [&](double l) { return f(l) <= v[0] + slope * (l - l1) + 1e-3 * level; };
  const double xtol = 1e-15 * std::max(1.0, std::abs(sub.lo) + std::abs(sub.hi));
  return Interval{numeric::bisect_boundary(on_line, l1, sub.lo, xtol),
                  numeric::bisect_boundary(on_line, sub.lo + 7.0 * h, sub.hi, xtol)};
}

}  // namespace

std::string to_string(Relation r) {
  switch (r) {
    case Relation::NotOrthogonal: return "NotOrthogonal";
    case Relation::BirkhoffOnly: return "BirkhoffOnly";
    case Relation::StronglyBirkhoff: return "StronglyBirkhoff";
  }
  return "?";
}

MinimizationResult directional_min(const NormedSpace& space, const Vector& x, const Vector& y,
                                   const Tolerances& tol, const ProbeFn& probe) {
  check_pair(space, x, y);
  LineFunction f(space, x, y);
  Search s = run_golden(space, f, x, y, probe);

  MinimizationResult r;
  r.tolerances = tol;
  r.bracket = s.bracket;
  r.convexity_violation = s.golden.convexity_violation;

  const double best = s.golden.fx;
  r.sublevel = sublevel_interval(f, s.golden.x, best + tol.flat * s.nx, s.bracket);
  r.core = sublevel_interval(f, s.golden.x, best + tol.flat * kCoreFactor * s.nx, s.bracket);

  const double arg_scale = s.nx / s.ny;
  const bool wide = r.sublevel.width() > tol.arg * arg_scale;
  r.genuinely_flat = wide && r.core.width() >= kCoreKeep * r.sublevel.width();
  std::optional<Interval> tilted;
  if (wide && !r.genuinely_flat) tilted = tilted_flat(f, r.sublevel, tol.flat * s.nx);
  if (r.genuinely_flat || tilted) {
    r.genuinely_flat = true;
    r.argmin = s.golden.x;
    r.min_value = best;
    r.flat_interval = tilted ? *tilted : r.core;
  } else {
    double m = 0.5 * (r.core.lo + r.core.hi);
    double fm = f(m);
    r.argmin = m;
    r.min_value = std::min(best, fm);
    r.flat_interval = {m, m};
  }
  r.evaluations = f.evaluations;
  return r;
}

double directional_min_value(const NormedSpace& space, const Vector& x, const Vector& y) {
  check_pair(space, x, y);
  LineFunction f(space, x, y);
  return run_golden(space, f, x, y, {}).golden.fx;
}

bool is_birkhoff(const NormedSpace& space, const Vector& x, const Vector& y, const Tolerances& tol) {
  return classify(space, x, y, tol).relation != Relation::NotOrthogonal;
}

bool is_strongly_birkhoff(const NormedSpace& space, const Vector& x, const Vector& y, const Tolerances& tol) {
  return classify(space, x, y, tol).relation == Relation::StronglyBirkhoff;
}

OrthogonalityVerdict classify(const NormedSpace& space, const Vector& x, const Vector& y,
                              const Tolerances& tol) {
  OrthogonalityVerdict v;
  v.min_result = directional_min(space, x, y, tol);
  const auto& m = v.min_result;
  v.norm_x = space.norm(x.coords());
  const double arg_scale = v.norm_x / space.norm(y.coords());

  if (m.min_value < v.norm_x * (1.0 - tol.value)) {
    v.relation = Relation::NotOrthogonal;
    v.witness = m.argmin;
  } else if (m.genuinely_flat && m.flat_interval.width() > tol.arg * arg_scale) {
    v.relation = Relation::BirkhoffOnly;
    const Interval& fi = m.flat_interval;
    double mid = 0.5 * (fi.lo + fi.hi);
    if (std::abs(mid) >= 0.25 * fi.width()) {
      v.witness = mid;
    } else {
      v.witness = 0.5 * (fi.hi >= -fi.lo ? fi.hi : fi.lo);
    }
  } else {
    v.relation = Relation::StronglyBirkhoff;
    v.witness = 0.0;
  }
  v.witness_value = eval_norm(space, x + y * v.witness);
  return v;
}

double angle_of(const Vector& v) {
  double a = std::atan2(v[1], v[0]);
  return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
}

namespace {

struct ArcBounds {
  double lo;
  double hi;
};

ArcBounds companion_bounds(const NormedSpace& space, const Vector& x, double theta_x, double h) {
  const double nx = eval_norm(space, x);
  std::vector<double> buf(2);
  auto f = [&](double phi, double lambda) {
    Vector y = sphere_point_2d(space, phi);
    buf[0] = x[0] + lambda * y[0];
    buf[1] = x[1] + lambda * y[1];
    return space.norm(buf);
  };
  auto left_positive = [&](double phi) { return (nx - f(phi, -h)) / h > 0.0; };
  auto right_nonneg = [&](double phi) { return (f(phi, h) - nx) / h >= 0.0; };
  const double a = theta_x;
  const double b = theta_x + std::numbers::pi;
  if (!left_positive(a) || left_positive(b) || !right_nonneg(a) || right_nonneg(b)) {
    throw Error("orthogonal companion: failed to bracket a sign change (malformed space?)");
  }
  double lo = numeric::bisect_boundary(left_positive, a, b, 1e-14);
  double hi = numeric::bisect_boundary(right_nonneg, a, b, 1e-14);
  if (lo > hi) lo = hi = 0.5 * (lo + hi);
  return {lo, hi};
}

}  // namespace

CompanionArc companion_arc_2d(const NormedSpace& space, const Vector& x) {
  if (space.dim() != 2) throw DimensionMismatch("orthogonal companion requires a planar space");
  if (x.dim() != 2) throw DimensionMismatch("orthogonal companion: x must be planar");
  if (x.is_zero()) throw InvalidArgument("orthogonal companion: x must be nonzero");
  const double nx = eval_norm(space, x);
  const double theta = angle_of(x);
  ArcBounds coarse = companion_bounds(space, x, theta, 1e-6 * nx);
  CompanionArc arc;
  arc.theta_x = theta;
  arc.phi_lo = coarse.lo;
  arc.phi_hi = coarse.hi;
  arc.phi = 0.5 * (coarse.lo + coarse.hi);
  arc.y = sphere_point_2d(space, arc.phi);
  const double w = coarse.hi - coarse.lo;
  if (w > 1e-7) {
    ArcBounds fine = companion_bounds(space, x, theta, 1e-8 * nx);
    arc.unique = (fine.hi - fine.lo) < 0.5 * w;
    if (arc.unique) {
      arc.phi = 0.5 * (fine.lo + fine.hi);
      arc.phi_lo = arc.phi_hi = arc.phi;
      arc.y = sphere_point_2d(space, arc.phi);
    }
  }
  return arc;
}

Vector orthogonal_companion_2d(const NormedSpace& space, const Vector& x) {
  return companion_arc_2d(space, x).y;
}

}  // namespace mgeo
