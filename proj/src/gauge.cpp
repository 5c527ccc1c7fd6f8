#include "mgeo/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mgeo/error.hpp"

namespace mgeo {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kStarSamples = 256;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double cross(const Point2& a, const Point2& b) { return a[0] * b[1] - a[1] * b[0]; }
double dot(const Point2& a, const Point2& b) { return a[0] * b[0] + a[1] * b[1]; }

double poly_eval(const std::vector<double>& params, double x, double y) {
  double s = -1.0;
  for (std::size_t k = 0; k + 2 < params.size(); k += 3) {
    s += params[k] * std::pow(x, params[k + 1]) * std::pow(y, params[k + 2]);
  }
  return s;
}

// First root of g on (0, hi] scanning upward from g(0) < 0.
template <class G>
double first_positive_root(G g, double hi) {
  constexpr int kScan = 256;
  double prev_t = 0.0;
  double prev = g(0.0);
  if (!(prev < 0.0)) throw MalformedBoundary("implicit arc equation is not negative at the origin");
  for (int k = 1; k <= kScan; ++k) {
    double t = hi * k / kScan;
    double cur = g(t);
    if (cur >= 0.0) {
      double lo = prev_t;
      double up = t;
      for (int it = 0; it < 200 && up - lo > 1e-16 * up; ++it) {
        double mid = 0.5 * (lo + up);
        if (g(mid) < 0.0) lo = mid; else up = mid;
      }
      return 0.5 * (lo + up);
    }
    prev_t = t;
    prev = cur;
  }
  throw MalformedBoundary("implicit arc equation has no root along the ray");
}

void check_implicit(const ImplicitArc& a) {
  if (a.branch != 1 && a.branch != -1) throw MalformedBoundary("implicit arc branch must be +1 or -1");
  if (a.equation == "superellipse") {
    if (a.params.size() != 1 || !(a.params[0] > 0.0)) {
      throw MalformedBoundary("superellipse arc needs params {p} with p > 0");
    }
    if (std::abs(a.x_begin) > 1.0 || std::abs(a.x_end) > 1.0) {
      throw MalformedBoundary("superellipse arc x-range must lie in [-1, 1]");
    }
  } else if (a.equation == "poly") {
    if (a.params.empty() || a.params.size() % 3 != 0) {
      throw MalformedBoundary("poly arc params must be (coefficient, i, j) triples");
    }
    for (std::size_t k = 0; k < a.params.size(); k += 3) {
      double i = a.params[k + 1];
      double j = a.params[k + 2];
      if (i < 0 || j < 0 || i != std::floor(i) || j != std::floor(j) || i + j < 1) {
        throw MalformedBoundary("poly arc exponents must be non-negative integers with i + j >= 1");
      }
    }
  } else {
    throw MalformedBoundary("unknown implicit arc equation '" + a.equation + "'");
  }
  if (a.x_begin == a.x_end) throw MalformedBoundary("implicit arc has an empty x-range");
}

double implicit_y(const ImplicitArc& a, double x) {
  if (a.equation == "superellipse") {
    double p = a.params[0];
    double r = 1.0 - std::pow(std::abs(x), p);
    return a.branch * std::pow(std::max(r, 0.0), 1.0 / p);
  }
  double t = first_positive_root([&](double t) { return poly_eval(a.params, x, a.branch * t); }, 16.0);
  return a.branch * t;
}

Point2 piece_point(const GaugePiece& piece, double s) {
  return std::visit(
      Overloaded{
          [s](const ImplicitArc& a) {
            double x = a.x_begin + s * (a.x_end - a.x_begin);
            if (s == 1.0) x = a.x_end;
            return Point2{x, implicit_y(a, x)};
          },
          [s](const CircularArc& c) {
            double t = c.angle_begin + s * (c.angle_end - c.angle_begin);
            if (s == 1.0) t = c.angle_end;
            return Point2{c.radius * std::cos(t), c.radius * std::sin(t)};
          },
          [s](const SegmentArc& g) {
            if (s == 1.0) return g.to;
            return Point2{g.from[0] + s * (g.to[0] - g.from[0]), g.from[1] + s * (g.to[1] - g.from[1])};
          },
          [s](const FlatLine& f) {
            double x = f.x_begin + s * (f.x_end - f.x_begin);
            if (s == 1.0) x = f.x_end;
            return Point2{x, f.y_level};
          }},
      piece);
}

void check_piece(const GaugePiece& piece) {
  std::visit(Overloaded{[](const ImplicitArc& a) { check_implicit(a); },
                        [](const CircularArc& c) {
                          if (!(c.radius > 0.0)) throw MalformedBoundary("circular arc radius must be positive");
                          if (!(c.angle_end > c.angle_begin)) {
                            throw MalformedBoundary("circular arc must have angle_begin < angle_end");
                          }
                        },
                        [](const SegmentArc& g) {
                          if (g.from == g.to) throw MalformedBoundary("segment arc has coincident endpoints");
                        },
                        [](const FlatLine& f) {
                          if (f.y_level == 0.0) throw MalformedBoundary("flat line through the origin");
                          if (f.x_begin == f.x_end) throw MalformedBoundary("flat line has an empty x-range");
                        }},
             piece);
}

}  // namespace

Point2 piece_begin(const GaugePiece& piece) { return piece_point(piece, 0.0); }
Point2 piece_end(const GaugePiece& piece) { return piece_point(piece, 1.0); }

GaugeTable::GaugeTable(Gauge2DBoundary boundary) : boundary_(std::move(boundary)) {
  const auto& pieces = boundary_.pieces;
  if (pieces.empty()) throw MalformedBoundary("gauge boundary has no pieces");
  for (const auto& p : pieces) check_piece(p);

  for (std::size_t k = 0; k + 1 < pieces.size(); ++k) {
    Point2 e = piece_end(pieces[k]);
    Point2 b = piece_begin(pieces[k + 1]);
    if (std::hypot(e[0] - b[0], e[1] - b[1]) > kClosureTol) {
      throw MalformedBoundary("gauge pieces " + std::to_string(k) + " and " + std::to_string(k + 1) +
                              " do not chain");
    }
  }
  Point2 first = piece_begin(pieces.front());
  Point2 last = piece_end(pieces.back());
  Point2 target = boundary_.symmetric ? Point2{-first[0], -first[1]} : first;
  if (std::hypot(last[0] - target[0], last[1] - target[1]) > kClosureTol) {
    throw MalformedBoundary("gauge boundary does not close up");
  }

  // Angular sweep of every piece; strictly increasing angle along each piece
  // is what makes every ray meet the curve once.
  double total = 0.0;
  ranges_.reserve(pieces.size());
  for (const auto& piece : pieces) {
    double sweep = 0.0;
    Point2 prev = piece_point(piece, 0.0);
    if (std::hypot(prev[0], prev[1]) < 1e-12) throw MalformedBoundary("gauge boundary passes through the origin");
    for (std::size_t s = 1; s <= kStarSamples; ++s) {
      Point2 cur = piece_point(piece, static_cast<double>(s) / kStarSamples);
      if (std::hypot(cur[0], cur[1]) < 1e-12) throw MalformedBoundary("gauge boundary passes through the origin");
      double inc = std::atan2(cross(prev, cur), dot(prev, cur));
      if (!(inc > 0.0)) throw MalformedBoundary("gauge boundary is not star-shaped about the origin");
      sweep += inc;
      prev = cur;
    }
    if (const auto* c = std::get_if<CircularArc>(&piece)) sweep = c->angle_end - c->angle_begin;
    ranges_.push_back({total, total + sweep});
    total += sweep;
  }
  sweep_ = boundary_.symmetric ? std::numbers::pi : kTwoPi;
  if (std::abs(total - sweep_) > 1e-7) {
    throw MalformedBoundary("gauge boundary winds " + std::to_string(total) + " rad instead of " +
                            std::to_string(sweep_));
  }
  ranges_.back().hi = sweep_;

  start_dir_ = first;
  start_angle_ = std::atan2(first[1], first[0]);

  bins_.resize(kTableSize);
  std::size_t k = 0;
  for (std::size_t b = 0; b < kTableSize; ++b) {
    double lo = sweep_ * static_cast<double>(b) / kTableSize;
    while (k + 1 < ranges_.size() && ranges_[k].hi < lo) ++k;
    bins_[b] = k;
  }
}

std::size_t GaugeTable::locate(double offset) const {
  auto b = static_cast<std::size_t>(offset / sweep_ * kTableSize);
  if (b >= kTableSize) b = kTableSize - 1;
  std::size_t k = bins_[b];
  while (k + 1 < ranges_.size() && offset > ranges_[k].hi) ++k;
  return k;
}

double GaugeTable::radius_on_piece(std::size_t k, double theta) const {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return std::visit(
      Overloaded{[&](const ImplicitArc& a) {
                   if (a.equation == "superellipse") {
                     double p = a.params[0];
                     return std::pow(std::pow(std::abs(c), p) + std::pow(std::abs(s), p), -1.0 / p);
                   }
                   return first_positive_root([&](double r) { return poly_eval(a.params, r * c, r * s); }, 16.0);
                 },
                 [](const CircularArc& arc) { return arc.radius; },
                 [&](const SegmentArc& g) {
                   Point2 d{g.to[0] - g.from[0], g.to[1] - g.from[1]};
                   return cross(g.from, g.to) / cross(Point2{c, s}, d);
                 },
                 [&](const FlatLine& f) { return f.y_level / s; }},
      boundary_.pieces[k]);
}

double GaugeTable::radius(double theta) const {
  double offset = std::fmod(theta - start_angle_, kTwoPi);
  if (offset < 0.0) offset += kTwoPi;
  if (boundary_.symmetric && offset >= std::numbers::pi) {
    offset -= std::numbers::pi;
    theta -= std::numbers::pi;
  }
  offset = std::clamp(offset, 0.0, sweep_);
  return radius_on_piece(locate(offset), theta);
}

double GaugeTable::value(double x, double y) const {
  if (x == 0.0 && y == 0.0) return 0.0;
  if (boundary_.symmetric) {
    double cr = start_dir_[0] * y - start_dir_[1] * x;
    if (cr < 0.0 || (cr == 0.0 && start_dir_[0] * x + start_dir_[1] * y < 0.0)) {
      x = -x;
      y = -y;
    }
  }
  double theta = std::atan2(y, x);
  double offset = std::fmod(theta - start_angle_, kTwoPi);
  if (offset < 0.0) offset += kTwoPi;
  if (offset > sweep_) {
    // Roundoff just below the start direction.
    offset = (offset > 0.5 * (sweep_ + kTwoPi)) ? 0.0 : sweep_;
  }
  double r = radius_on_piece(locate(offset), theta);
  if (!(r > 0.0) || !std::isfinite(r)) throw MalformedBoundary("gauge radius lookup failed");
  return std::hypot(x, y) / r;
}

GaugeConvexityReport validate_gauge_convexity(const Gauge2DBoundary& boundary, double angular_step) {
  if (!(angular_step > 0.0)) throw InvalidArgument("angular_step must be positive");
  GaugeTable table(boundary);
  auto n = static_cast<std::size_t>(std::ceil(kTwoPi / angular_step));
  n = std::max<std::size_t>(n, 8);
  std::vector<Point2> pts(n);
  std::vector<double> angles(n);
  for (std::size_t k = 0; k < n; ++k) {
    double t = table.start_angle() + kTwoPi * static_cast<double>(k) / n;
    double r = table.radius(t);
    angles[k] = t;
    pts[k] = {r * std::cos(t), r * std::sin(t)};
  }
  GaugeConvexityReport rep;
  rep.samples = n;
  constexpr double kTol = 1e-12;
  for (std::size_t k = 0; k < n; ++k) {
    const Point2& a = pts[(k + n - 1) % n];
    const Point2& b = pts[k];
    const Point2& c = pts[(k + 1) % n];
    double cr = cross(Point2{b[0] - a[0], b[1] - a[1]}, Point2{c[0] - b[0], c[1] - b[1]});
    if (cr < rep.worst_cross) {
      rep.worst_cross = cr;
      if (cr < -kTol) {
        rep.passed = false;
        rep.witness_angles = {angles[(k + n - 1) % n], angles[k], angles[(k + 1) % n]};
      }
    }
  }
  return rep;
}

}  // namespace mgeo
