#include "mgeo/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "mgeo/error.hpp"
#include "mgeo/numeric.hpp"

namespace mgeo {
namespace {

struct Candidate {
  Vector u;
  Vector v;
  double separation;
};

Vector random_unit(const NormedSpace& space, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> c(space.dim());
  for (;;) {
    for (auto& x : c) x = g(rng);
    Vector v(c);
    if (!v.is_zero()) return normalize(space, v);
  }
}

std::optional<FlatWitness> confirm_flat(const NormedSpace& space, const Candidate& c, double tol, double sep) {
  Vector mid = (c.u + c.v) * 0.5;
  if (mid.is_zero()) return std::nullopt;
  Vector x = normalize(space, mid);
  Vector y = c.v - c.u;
  OrthogonalityVerdict ver = classify(space, x, y, Tolerances{tol, 1e-6, tol});
  if (ver.relation != Relation::BirkhoffOnly) return std::nullopt;
  const Interval& fi = ver.min_result.flat_interval;
  Vector u = normalize(space, x + y * fi.lo);
  Vector v = normalize(space, x + y * fi.hi);
  FlatWitness w{u, v, eval_norm(space, (u + v) * 0.5), eval_norm(space, u - v)};
  if (w.midpoint_norm < 1.0 - tol || w.separation < sep) return std::nullopt;
  return w;
}

}  // namespace

std::string to_string(ConvexityVerdict v) {
  return v == ConvexityVerdict::FlatFound ? "FlatFound" : "NoFlatFound";
}

ConvexityReport strict_convexity_probe(const NormedSpace& space, const ConvexityProbeOptions& opts) {
  if (opts.num_samples < 1) throw InvalidArgument("num_samples must be >= 1");
  if (!(opts.tol > 0.0) || !(opts.sep > 0.0)) throw InvalidArgument("tol and sep must be positive");
  ConvexityReport rep;
  std::vector<Candidate> candidates;
  const double threshold = 1.0 - opts.tol;

  auto consider = [&](const Vector& u, const Vector& v) {
    ++rep.samples_used;
    double s = eval_norm(space, u - v);
    if (s < opts.sep) return;
    double m = 0.5 * eval_norm(space, u + v);
    rep.max_midpoint_norm = std::max(rep.max_midpoint_norm, m);
    if (m >= threshold) candidates.push_back({u, v, s});
  };

  if (space.dim() == 2 && opts.sweep_angles >= 2) {
    const std::size_t n = opts.sweep_angles;
    std::vector<Vector> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      pts.push_back(sphere_point_2d(space, 2.0 * std::numbers::pi * static_cast<double>(i) / n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 1; k <= n / 2; k *= 2) consider(pts[i], pts[(i + k) % n]);
    }
  }
  std::mt19937_64 rng(opts.seed);
  if (space.dim() >= 2) {
    for (std::size_t s = 0; s < opts.num_samples; ++s) {
      Vector u = random_unit(space, rng);
      Vector v = random_unit(space, rng);
      consider(u, v);
    }
  }

  // Widest candidates first: genuine segments show up at large separations.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.separation > b.separation; });
  const std::size_t limit = std::min(candidates.size(), opts.max_candidates);
  for (std::size_t k = 0; k < limit; ++k) {
    ++rep.candidates_checked;
    if (auto w = confirm_flat(space, candidates[k], opts.tol, opts.sep)) {
      rep.verdict = ConvexityVerdict::FlatFound;
      rep.flat_witness = std::move(*w);
      break;
    }
  }
  return rep;
}

ConvexityReport strict_convexity_probe(const NormedSpace& space, std::size_t num_samples, double tol, double sep) {
  ConvexityProbeOptions o;
  o.num_samples = num_samples;
  o.tol = tol;
  o.sep = sep;
  return strict_convexity_probe(space, o);
}

std::vector<std::pair<double, double>> modulus_samples(const NormedSpace& space, const std::vector<double>& eps,
                                                       std::size_t num_samples, std::uint64_t seed) {
  for (double e : eps) {
    if (!(e > 0.0 && e <= 2.0)) throw InvalidArgument("modulus of convexity needs 0 < eps <= 2");
  }
  if (num_samples < 1) throw InvalidArgument("num_samples must be >= 1");
  const std::size_t d = space.dim();
  if (d < 2) {
    // The line: only antipodal pairs exist, so δ(ε) = 1 at ε = 2 and the
    // infimum over an empty set (taken as 1) below it.
    std::vector<std::pair<double, double>> out;
    for (double e : eps) out.emplace_back(e, 1.0);
    return out;
  }

  struct Plane {
    Vector a;
    Vector b;
    double theta;
  };
  std::vector<Plane> planes;
  planes.reserve(num_samples);
  if (d == 2) {
    for (std::size_t i = 0; i < num_samples; ++i) {
      planes.push_back({Vector{1.0, 0.0}, Vector{0.0, 1.0}, std::numbers::pi * static_cast<double>(i) / num_samples});
    }
  } else {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    auto gauss = [&] {
      std::vector<double> c(d);
      for (auto& x : c) x = g(rng);
      return Vector(std::move(c));
    };
    while (planes.size() < num_samples) {
      Vector a = gauss();
      Vector b = gauss();
      double na = a.euclidean_norm();
      if (na < 1e-12) continue;
      a = a / na;
      b = b - a * a.dot(b);
      double nb = b.euclidean_norm();
      if (nb < 1e-12) continue;
      planes.push_back({a, b / nb, 0.0});
    }
  }

  std::vector<std::vector<double>> values(planes.size(), std::vector<double>(eps.size(), 1.0));
  numeric::parallel_for(planes.size(), [&](std::size_t k) {
    const Plane& pl = planes[k];
    auto point = [&](double phi) { return normalize(space, pl.a * std::cos(phi) + pl.b * std::sin(phi)); };
    const Vector x = point(pl.theta);
    for (std::size_t e = 0; e < eps.size(); ++e) {
      auto close = [&](double phi) { return eval_norm(space, x - point(phi)) < eps[e]; };
      if (eps[e] >= 2.0 - 1e-12) continue;
      double far_end = pl.theta + std::numbers::pi;
      double phi = far_end;
      if (!close(far_end)) {
        // First angle at distance >= ε; the distance is monotone along the half-turn.
        double lo = pl.theta;
        for (int it = 0; it < 200 && phi - lo > 1e-15; ++it) {
          double mid = 0.5 * (lo + phi);
          if (close(mid)) lo = mid; else phi = mid;
        }
      }
      Vector y = point(phi);
      values[k][e] = 1.0 - eval_norm(space, (x + y) * 0.5);
    }
  });

  // At ε = 2 the qualifying pairs are x and −z with [x, z] a segment of the
  // sphere, so δ(2) = 1 − L/2 for the longest segment length L. Bisection on
  // ‖x − y‖ >= 2 cannot see this: near −x the distance is within rounding of
  // 2 over a whole arc.
  std::optional<double> delta_two;
  auto two = [&] {
    if (!delta_two) {
      ConvexityProbeOptions po;
      po.seed = seed;
      ConvexityReport r = strict_convexity_probe(space, po);
      delta_two = r.flat_witness ? 1.0 - std::min(1.0, 0.5 * r.flat_witness->separation) : 1.0;
    }
    return *delta_two;
  };

  std::vector<std::pair<double, double>> out;
  for (std::size_t e = 0; e < eps.size(); ++e) {
    double m = 1.0;
    if (eps[e] >= 2.0 - 1e-12) {
      m = two();
    } else {
      for (const auto& v : values) m = std::min(m, v[e]);
    }
    out.emplace_back(eps[e], std::clamp(m, 0.0, 1.0));
  }
  return out;
}

double modulus_of_convexity(const NormedSpace& space, double epsilon, std::size_t num_samples, std::uint64_t seed) {
  return modulus_samples(space, {epsilon}, num_samples, seed).front().second;
}

FlatConstruction flat_segment_orthogonality_construction(const NormedSpace& space, const Vector& u, const Vector& v,
                                                         double tol) {
  if (std::abs(eval_norm(space, u) - 1.0) > tol || std::abs(eval_norm(space, v) - 1.0) > tol) {
    throw PreconditionFailed("flat segment construction: u and v must be unit vectors");
  }
  Vector x = (u + v) * 0.5;
  double m = eval_norm(space, x);
  if (m < 1.0 - tol) {
    throw PreconditionFailed("flat segment construction: segment [u, v] is not on the sphere (midpoint norm " +
                             std::to_string(m) + ")");
  }
  Vector y = v - u;
  OrthogonalityVerdict ver = classify(space, x, y, Tolerances{tol, 1e-6, tol});
  return {std::move(x), std::move(y), std::move(ver)};
}

}  // namespace mgeo
