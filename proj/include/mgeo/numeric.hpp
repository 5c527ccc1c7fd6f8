#pragma once

// Small derivative-free 1-D routines shared by the modules.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mgeo::numeric {

inline constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

struct GoldenResult {
  double x = 0.0;   // best probe
  double fx = 0.0;
  double lo = 0.0;  // final bracket
  double hi = 0.0;
  int evaluations = 0;
  bool convexity_violation = false;
};

/// Golden-section search for a minimizer of a convex f on [lo, hi], stopped
/// when the bracket is narrower than x_tol. `probe(x, fx)` sees every
/// evaluation. The best probe over the whole run is returned; the final
/// bracket midpoint is checked against f(mid) <= max(f(lo), f(hi)) + conv_tol.
template <class F, class Probe>
GoldenResult golden_section(F&& f, double lo, double hi, double x_tol, double conv_tol, Probe&& probe,
                            int max_iter = 300) {
  GoldenResult r;
  auto eval = [&](double x) {
    double v = f(x);
    ++r.evaluations;
    probe(x, v);
    if (r.evaluations == 1 || v < r.fx) {
      r.fx = v;
      r.x = x;
    }
    return v;
  };
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  for (int it = 0; it < max_iter && (b - a) > x_tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(d);
    }
  }
  double fa = eval(a);
  double fb = eval(b);
  double fm = eval(0.5 * (a + b));
  r.convexity_violation = fm > std::max(fa, fb) + conv_tol;
  r.lo = a;
  r.hi = b;
  return r;
}

template <class F>
GoldenResult golden_section(F&& f, double lo, double hi, double x_tol, double conv_tol = 1e-12) {
  return golden_section(std::forward<F>(f), lo, hi, x_tol, conv_tol, [](double, double) {});
}

/// Boundary of {inside(x)} between a point known inside and one known
/// outside; returns the last inside point.
template <class Pred>
double bisect_boundary(Pred&& inside, double in, double out, double x_tol, int max_iter = 200) {
  for (int it = 0; it < max_iter && std::abs(out - in) > x_tol; ++it) {
    double mid = 0.5 * (in + out);
    if (inside(mid)) in = mid; else out = mid;
  }
  return in;
}

/// Runs body(i) for i in [0, n) on the available hardware threads. Each
/// index is processed exactly once; callers write results into per-index
/// slots so the output order never depends on scheduling.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t workers = std::min<std::size_t>(hw, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < n; i = next++) body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace mgeo::numeric
