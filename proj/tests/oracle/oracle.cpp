#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mgeo/error.hpp"

namespace mgeo::oracle {

namespace {

double line_value(const NormedSpace& space, const Vector& x, const Vector& y, double lambda) {
  std::vector<double> w(x.dim());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = x[k] + lambda * y[k];
  return space.norm(w);
}

}  // namespace

GridMin grid_min(const NormedSpace& space, const Vector& x, const Vector& y, const GridSpec& grid) {
  if (!(grid.lo < grid.hi) || grid.steps < 2) throw InvalidArgument("grid_min: bad grid");
  GridMin r;
  double lo = grid.lo;
  double hi = grid.hi;
  double best = 0.0;
  double best_v = std::numeric_limits<double>::infinity();
  for (int round = 0; round <= grid.refinement_rounds; ++round) {
    double h = (hi - lo) / grid.steps;
    std::vector<double> vals(grid.steps + 1);
    for (int k = 0; k <= grid.steps; ++k) {
      double l = lo + k * h;
      vals[k] = line_value(space, x, y, l);
      ++r.evaluations;
      if (vals[k] < best_v) {
        best_v = vals[k];
        best = l;
      }
    }
    if (round == 0) {
      r.flat_lo = hi;
      r.flat_hi = lo;
      for (int k = 0; k <= grid.steps; ++k) {
        if (vals[k] <= best_v + 1e-12) {
          r.flat_lo = std::min(r.flat_lo, lo + k * h);
          r.flat_hi = std::max(r.flat_hi, lo + k * h);
        }
      }
    }
    double half = std::max((hi - lo) / 20.0, 2.0 * h);
    lo = best - half;
    hi = best + half;
  }
  r.argmin = best;
  r.min_value = best_v;
  return r;
}

ClosedFormMin closed_form_lp_min(double p, const Vector& x, const Vector& y) {
  require_same_dim(x, y, "closed_form_lp_min");
  if (y.is_zero()) throw InvalidArgument("closed_form_lp_min: zero y");
  ClosedFormMin r;
  if (p == 2.0) {
    double l = -x.dot(y) / y.dot(y);
    Vector w = x + l * y;
    r.argmin = r.lo = r.hi = l;
    r.min_value = w.euclidean_norm();
    return r;
  }
  std::vector<double> cand;
  std::size_t n = x.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] != 0.0) cand.push_back(-x[i] / y[i]);
  }
  if (std::isinf(p)) {
    // crossings x_i + λy_i = ±(x_j + λy_j)
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (double s : {1.0, -1.0}) {
          double den = y[i] - s * y[j];
          if (den != 0.0) cand.push_back((s * x[j] - x[i]) / den);
        }
      }
    }
  } else if (p != 1.0) {
    throw InvalidArgument("closed_form_lp_min: p must be 1, 2 or inf");
  }
  auto f = [&](double l) {
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double c = std::abs(x[i] + l * y[i]);
      v = std::isinf(p) ? std::max(v, c) : v + c;
    }
    return v;
  };
  double best = std::numeric_limits<double>::infinity();
  for (double l : cand) best = std::min(best, f(l));
  double slack = 1e-13 * std::max(1.0, best);
  r.lo = std::numeric_limits<double>::infinity();
  r.hi = -r.lo;
  for (double l : cand) {
    if (f(l) <= best + slack) {
      r.lo = std::min(r.lo, l);
      r.hi = std::max(r.hi, l);
    }
  }
  r.min_value = best;
  r.argmin = 0.5 * (r.lo + r.hi);
  return r;
}

SweepMax sweep_max_coefficient(const NormedSpace& space, const Vector& b0, const Vector& b1, std::size_t i) {
  if (space.dim() != 2 || i > 1) throw InvalidArgument("sweep_max_coefficient: planar only");
  double det = b0[0] * b1[1] - b1[0] * b0[1];
  // Cramer's rule for w = c0 b0 + c1 b1
  auto coef = [&](double w0, double w1) {
    return i == 0 ? (w0 * b1[1] - b1[0] * w1) / det : (b0[0] * w1 - w0 * b0[1]) / det;
  };
  auto value_at = [&](double t) {
    double c = std::cos(t), s = std::sin(t);
    std::vector<double> w{c, s};
    double nv = space.norm(w);
    return coef(c / nv, s / nv);
  };
  SweepMax best{-std::numeric_limits<double>::infinity(), 0.0};
  const int n = 36000;
  double h = 2.0 * std::numbers::pi / n;
  for (int k = 0; k < n; ++k) {
    double v = value_at(k * h);
    if (v > best.value) best = {v, k * h};
  }
  for (int round = 0; round < 4; ++round) {
    double c = best.theta;
    double hh = h / 1000.0;
    for (int k = -1000; k <= 1000; ++k) {
      double v = value_at(c + k * hh);
      if (v > best.value) best = {v, c + k * hh};
    }
    h = hh * 2.0;
  }
  return best;
}

CompanionRange companion_range(const NormedSpace& space, const Vector& x, std::size_t samples, double tol) {
  double tx = std::atan2(x[1], x[0]);
  if (tx < 0.0) tx += 2.0 * std::numbers::pi;
  double nx = space.norm(x.coords());
  CompanionRange r;
  r.phi_lo = std::numeric_limits<double>::infinity();
  r.phi_hi = -r.phi_lo;
  GridSpec g{-3.0, 3.0, 600, 4};
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < samples; ++k) {
    double phi = tx + std::numbers::pi * static_cast<double>(k) / samples;
    Vector y = sphere_point_2d(space, phi);
    GridMin m = grid_min(space, x, y, g);
    if (m.min_value > best) {
      best = m.min_value;
      r.phi_best = phi;
    }
    if (m.min_value >= nx * (1.0 - tol)) {
      ++r.hits;
      r.phi_lo = std::min(r.phi_lo, phi);
      r.phi_hi = std::max(r.phi_hi, phi);
    }
  }
  return r;
}

}  // namespace mgeo::oracle
