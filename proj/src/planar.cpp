#include "mgeo/planar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mgeo/basis.hpp"
#include "mgeo/convexity.hpp"
#include "mgeo/error.hpp"
#include "mgeo/numeric.hpp"

namespace mgeo {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDedupeTol = 1e-4;

double diameter_angle(double theta) {
  double a = std::fmod(theta, kPi);
  return a < 0.0 ? a + kPi : a;
}

double diameter_distance(double a, double b) {
  double d = std::abs(diameter_angle(a) - diameter_angle(b));
  return std::min(d, kPi - d);
}

bool same_pair(const DiameterPair& p, const DiameterPair& q) {
  auto close = [](double a, double b) { return diameter_distance(a, b) < kDedupeTol; };
  return (close(p.theta_x, q.theta_x) && close(p.theta_y, q.theta_y)) ||
         (close(p.theta_x, q.theta_y) && close(p.theta_y, q.theta_x));
}

void push_unique(std::vector<DiameterPair>& out, DiameterPair p) {
  for (const auto& q : out) {
    if (same_pair(p, q)) return;
  }
  out.push_back(std::move(p));
}

struct BackResidual {
  Vector x;
  CompanionArc arc;
  double h;  // signed
};

BackResidual back_residual(const NormedSpace& space, double theta, const Tolerances& ctol) {
  Vector x = sphere_point_2d(space, theta);
  CompanionArc arc = companion_arc_2d(space, x);
  MinimizationResult m = directional_min(space, arc.y, x, ctol);
  double h = m.flat_interval.offset_from_zero();
  return {std::move(x), std::move(arc), h};
}

void require_planar(const NormedSpace& space, const char* what) {
  if (space.dim() != 2) throw DimensionMismatch(std::string(what) + " requires a planar space");
}

}  // namespace

std::string to_string(Strength s) { return s == Strength::StronglyConjugate ? "StronglyConjugate" : "Conjugate"; }

DiameterPair make_diameter_pair(const NormedSpace& space, const Vector& x, const Vector& y, const Tolerances& tol) {
  DiameterPair p;
  p.x = normalize(space, x);
  p.y = normalize(space, y);
  p.theta_x = angle_of(p.x);
  p.theta_y = angle_of(p.y);
  OrthogonalityVerdict a = classify(space, p.x, p.y, tol);
  OrthogonalityVerdict b = classify(space, p.y, p.x, tol);
  p.residual_xy = std::abs(a.min_result.flat_interval.offset_from_zero());
  p.residual_yx = std::abs(b.min_result.flat_interval.offset_from_zero());
  p.strength = (a.relation == Relation::StronglyBirkhoff && b.relation == Relation::StronglyBirkhoff)
                   ? Strength::StronglyConjugate
                   : Strength::Conjugate;
  return p;
}

ConjugateSearch find_conjugate_diameters(const NormedSpace& space, std::size_t grid_size, double tol,
                                         const Tolerances& ctol) {
  require_planar(space, "find_conjugate_diameters");
  if (grid_size < 2) throw InvalidArgument("find_conjugate_diameters: grid_size must be >= 2");
  const std::size_t n = grid_size;
  auto theta_of = [&](std::size_t k) { return kPi * static_cast<double>(k) / static_cast<double>(n); };

  std::vector<std::optional<BackResidual>> grid(n);
  numeric::parallel_for(n, [&](std::size_t k) { grid[k] = back_residual(space, theta_of(k), ctol); });

  ConjugateSearch out;
  out.grid_size = n;
  out.all_conjugate = true;
  for (const auto& g : grid) {
    if (!g->arc.unique) out.non_smooth_caveat = true;
    if (std::abs(g->h) > tol) out.all_conjugate = false;
  }

  auto accept = [&](const Vector& x, const Vector& y, bool non_smooth) {
    DiameterPair p = make_diameter_pair(space, x, y, ctol);
    p.non_smooth = non_smooth;
    if (p.residual_xy <= tol && p.residual_yx <= tol) push_unique(out.pairs, std::move(p));
  };

  if (out.all_conjugate) {
    for (const auto& g : grid) accept(g->x, g->arc.y, !g->arc.unique);
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      const BackResidual& a = *grid[k];
      // At θ = π the point is −x(0) with companion −y(0) and the same h.
      const double hb = grid[(k + 1) % n]->h;
      if (std::abs(a.h) <= tol) {
        accept(a.x, a.arc.y, !a.arc.unique);
        continue;
      }
      if (std::abs(hb) <= tol || (a.h > 0.0) == (hb > 0.0)) continue;
      double lo = theta_of(k);
      double hi = theta_of(k) + kPi / static_cast<double>(n);
      const bool lo_positive = a.h > 0.0;
      for (int it = 0; it < 60 && hi - lo > 1e-14; ++it) {
        double mid = 0.5 * (lo + hi);
        double h = back_residual(space, mid, ctol).h;
        if (std::abs(h) <= 0.01 * tol) {
          lo = hi = mid;
          break;
        }
        if ((h > 0.0) == lo_positive) lo = mid; else hi = mid;
      }
      BackResidual r = back_residual(space, 0.5 * (lo + hi), ctol);
      if (std::abs(r.h) <= tol) accept(r.x, r.arc.y, !r.arc.unique);
    }
  }
  if (out.pairs.empty()) throw Error("find_conjugate_diameters: no conjugate pair found");
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const DiameterPair& p, const DiameterPair& q) { return p.theta_x < q.theta_x; });
  return out;
}

RadonResult is_radon(const NormedSpace& space, std::size_t grid_size, double tol) {
  require_planar(space, "is_radon");
  if (grid_size < 2) throw InvalidArgument("is_radon: grid_size must be >= 2");
  const std::size_t n = grid_size;
  std::vector<std::optional<BackResidual>> grid(n);
  numeric::parallel_for(n, [&](std::size_t k) {
    grid[k] = back_residual(space, kPi * static_cast<double>(k) / static_cast<double>(n), Tolerances{});
  });
  RadonResult r;
  r.grid_size = n;
  r.max_residual = -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& g = *grid[k];
    if (!g.arc.unique) r.non_smooth_caveat = true;
    if (std::abs(g.h) > r.max_residual) {
      r.max_residual = std::abs(g.h);
      r.witness_theta = kPi * static_cast<double>(k) / static_cast<double>(n);
      r.witness_x = g.x;
      r.witness_y = g.arc.y;
    }
  }
  r.radon = r.max_residual <= tol;
  return r;
}

PairScanReport exhaustive_pair_scan(const NormedSpace& space, double resolution_deg, const PairScanOptions& opts) {
  require_planar(space, "exhaustive_pair_scan");
  if (!(resolution_deg > 0.0) || resolution_deg > 1.0 + 1e-12) {
    throw PreconditionFailed("exhaustive_pair_scan: angular resolution must be in (0, 1] degrees");
  }
  const std::size_t n = static_cast<std::size_t>(std::llround(180.0 / resolution_deg));
  const double step = kPi / static_cast<double>(n);
  PairScanReport rep;
  rep.grid_size = n;
  rep.resolution_deg = resolution_deg;

  std::vector<Vector> pts;
  pts.reserve(n);
  for (std::size_t a = 0; a < n; ++a) pts.push_back(sphere_point_2d(space, step * static_cast<double>(a)));

  auto drop = [&](const Vector& x, const Vector& y) {
    double nx = eval_norm(space, x);
    return std::max(0.0, (nx - directional_min_value(space, x, y)) / nx);
  };
  // V[a][b]: relative drop of ‖x_a + λ x_b‖ below ‖x_a‖.
  std::vector<double> V(n * n, 1.0);
  numeric::parallel_for(n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) V[a * n + b] = drop(pts[a], pts[b]);
    }
  });
  auto R = [&](std::size_t a, std::size_t b) { return std::max(V[a * n + b], V[b * n + a]); };

  struct Hit {
    double r;
    std::size_t a;
    std::size_t b;
  };
  std::vector<Hit> hits;
  const double threshold = 5.0 * step;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      double r = R(a, b);
      if (r > threshold) continue;
      bool local_min = true;
      for (int da = -1; da <= 1 && local_min; ++da) {
        for (int db = -1; db <= 1; ++db) {
          if (da == 0 && db == 0) continue;
          std::size_t a2 = (a + n + static_cast<std::size_t>(da + static_cast<int>(n))) % n;
          std::size_t b2 = (b + n + static_cast<std::size_t>(db + static_cast<int>(n))) % n;
          if (a2 == b2) continue;
          if (R(a2, b2) + 1e-12 < r) {
            local_min = false;
            break;
          }
        }
      }
      if (local_min) hits.push_back({r, a, b});
    }
  }
  rep.near_hits = hits.size();
  std::stable_sort(hits.begin(), hits.end(), [](const Hit& p, const Hit& q) { return p.r < q.r; });
  if (hits.size() > opts.max_refinements) hits.resize(opts.max_refinements);
  rep.refined = hits.size();

  // Partner search along the companion arc of x(t): v(x -> y) vanishes
  // there, so only the back drop v(y -> x) is left to minimize.
  struct Partner {
    double phi;
    double back;
  };
  auto partner = [&](double t) {
    Vector x = sphere_point_2d(space, t);
    CompanionArc arc = companion_arc_2d(space, x);
    auto back = [&](double phi) { return drop(sphere_point_2d(space, phi), x); };
    Partner best{arc.phi, back(arc.phi)};
    if (!arc.unique) {
      const int k = 8;
      for (int i = 0; i <= k; ++i) {
        double phi = arc.phi_lo + (arc.phi_hi - arc.phi_lo) * i / k;
        double v = back(phi);
        if (v < best.back) best = {phi, v};
      }
      const double cell = (arc.phi_hi - arc.phi_lo) / k;
      auto g = numeric::golden_section(back, std::max(arc.phi_lo, best.phi - cell),
                                       std::min(arc.phi_hi, best.phi + cell), 1e-15);
      if (g.fx < best.back) best = {g.x, g.fx};
    }
    return best;
  };
  auto residual_at = [&](double t, double p) {
    Vector x = sphere_point_2d(space, t);
    Vector y = sphere_point_2d(space, p);
    return std::max(drop(x, y), drop(y, x));
  };
  struct Candidate {
    double t;
    double p;
    double r;
  };
  // 2-D zoom on R: converges onto isolated zeros such as corner pairs.
  auto zoom = [&](const Hit& h) {
    Candidate c{step * static_cast<double>(h.a), step * static_cast<double>(h.b), h.r};
    double half = step;
    int shrinks = 0;
    for (int moves = 0; shrinks < opts.refinement_rounds && moves < 64 && c.r > 1e-15;) {
      const double ct = c.t;
      const double cp = c.p;
      int bi = 0;
      int bj = 0;
      for (int i = -5; i <= 5; ++i) {
        for (int j = -5; j <= 5; ++j) {
          if (i == 0 && j == 0) continue;
          double t = ct + half * i / 5.0;
          double p = cp + half * j / 5.0;
          if (diameter_distance(t, p) < 1e-9) continue;
          double r = residual_at(t, p);
          if (r < c.r) {
            c = {t, p, r};
            bi = i;
            bj = j;
          }
        }
      }
      if (std::abs(bi) == 5 || std::abs(bj) == 5) {
        ++moves;
      } else {
        half *= 0.3;
        ++shrinks;
      }
    }
    return c;
  };
  // 1-D zoom along companion arcs: follows valleys of R where one of the
  // two points slides along a flat piece.
  auto follow = [&](double start) {
    double ct = start;
    Partner cbest = partner(ct);
    double half = 2.0 * step;
    for (int round = 0; round < opts.refinement_rounds + 10 && half > 1e-14 && cbest.back > 1e-16; ++round) {
      const double c = ct;
      int bi = 0;
      for (int i = -10; i <= 10; ++i) {
        if (i == 0) continue;
        double t = c + half * i / 10.0;
        Partner p = partner(t);
        if (p.back < cbest.back) {
          cbest = p;
          ct = t;
          bi = i;
        }
      }
      if (std::abs(bi) != 10) half *= 0.3;
    }
    return Candidate{ct, cbest.phi, residual_at(ct, cbest.phi)};
  };

  Tolerances ctol{opts.value_tol, opts.arg_tol, 1e-9};
  std::vector<std::vector<DiameterPair>> found(hits.size());
  numeric::parallel_for(hits.size(), [&](std::size_t k) {
    const Hit& h = hits[k];
    std::vector<Candidate> cands;
    if (h.r <= 1e-3 * opts.value_tol) {
      cands.push_back({step * static_cast<double>(h.a), step * static_cast<double>(h.b), h.r});
    } else {
      cands.push_back(zoom(h));
      cands.push_back(follow(step * static_cast<double>(h.a)));
      cands.push_back(follow(step * static_cast<double>(h.b)));
    }
    for (const Candidate& c : cands) {
      if (c.r > 10.0 * opts.value_tol) continue;
      Vector x = sphere_point_2d(space, c.t);
      Vector y = sphere_point_2d(space, c.p);
      OrthogonalityVerdict va = classify(space, x, y, ctol);
      OrthogonalityVerdict vb = classify(space, y, x, ctol);
      if (va.relation == Relation::NotOrthogonal || vb.relation == Relation::NotOrthogonal) continue;
      found[k].push_back(make_diameter_pair(space, x, y, ctol));
    }
  });
  for (auto& list : found) {
    for (auto& f : list) push_unique(rep.conjugate_pairs, std::move(f));
  }
  std::sort(rep.conjugate_pairs.begin(), rep.conjugate_pairs.end(),
            [](const DiameterPair& p, const DiameterPair& q) { return p.theta_x < q.theta_x; });
  for (const auto& p : rep.conjugate_pairs) {
    if (p.strength == Strength::StronglyConjugate) ++rep.strongly_conjugate;
  }
  return rep;
}

GeneralizedConjugateResult generalized_conjugate_check(const NormedSpace& space, const std::vector<Vector>& diameters,
                                                       const Tolerances& tol) {
  const std::size_t n = diameters.size();
  if (n != space.dim()) throw PreconditionFailed("generalized_conjugate_check: need exactly dim directions");
  for (const auto& d : diameters) {
    if (d.dim() != space.dim()) throw DimensionMismatch("generalized_conjugate_check: dimension mismatch");
    if (d.is_zero()) throw PreconditionFailed("generalized_conjugate_check: zero direction");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double c = diameters[i].dot(diameters[j]) / (diameters[i].euclidean_norm() * diameters[j].euclidean_norm());
      if (std::abs(c) > 1.0 - 1e-12) throw PreconditionFailed("generalized_conjugate_check: dependent directions");
    }
  }
  GeneralizedConjugateResult r;
  for (std::size_t i = 0; i < n && r.verdict; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!is_birkhoff(space, diameters[i], diameters[j], tol)) {
        r.verdict = false;
        r.failing_pair = {i, j};
        break;
      }
    }
  }
  return r;
}

CrosscheckReport conjugate_basis_crosscheck(const NormedSpace& space, std::size_t grid_size, double tol) {
  require_planar(space, "conjugate_basis_crosscheck");
  CrosscheckReport rep;
  rep.hypothesis_verified = strict_convexity_probe(space).verdict == ConvexityVerdict::NoFlatFound;
  if (!rep.hypothesis_verified) {
    rep.skipped = true;
    return rep;
  }
  ConjugateSearch s = find_conjugate_diameters(space, grid_size, tol);
  for (const auto& p : s.pairs) {
    if (p.strength != Strength::StronglyConjugate) continue;
    ++rep.checked;
    Basis b(space, {p.x, p.y});
    if (!strongly_orthonormal_direct(space, b).verdict) rep.disagreements.push_back(p);
  }
  return rep;
}

}  // namespace mgeo
