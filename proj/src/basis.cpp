#include "mgeo/basis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "mgeo/convexity.hpp"
#include "mgeo/error.hpp"
#include "mgeo/numeric.hpp"
#include "mgeo/orthogonality.hpp"

namespace mgeo {

Basis::Basis(const NormedSpace& space, std::vector<Vector> vectors) : vectors_(std::move(vectors)) {
  const std::size_t m = space.dim();
  if (vectors_.size() != m) {
    throw InvalidArgument("basis: expected " + std::to_string(m) + " vectors, got " + std::to_string(vectors_.size()));
  }
  Eigen::MatrixXd mat(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    if (vectors_[j].dim() != m) throw DimensionMismatch("basis: vector dimension does not match the space");
    double n = eval_norm(space, vectors_[j]);
    if (std::abs(n - 1.0) > 1e-10) {
      throw InvalidArgument("basis: vector " + std::to_string(j) + " is not a unit vector (norm " +
                            std::to_string(n) + ")");
    }
    for (std::size_t r = 0; r < m; ++r) mat(r, j) = vectors_[j][r];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat);
  if (!(svd.singularValues().minCoeff() > 1e-10)) throw InvalidArgument("basis: vectors are linearly dependent");
  Eigen::MatrixXd inv = mat.fullPivLu().inverse();
  inverse_.resize(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) inverse_[r * m + c] = inv(r, c);
  }
}

Basis Basis::standard(const NormedSpace& space) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < space.dim(); ++i) v.push_back(Vector::unit(space.dim(), i));
  return Basis(space, std::move(v));
}

double Basis::coefficient(std::span<const double> w, std::size_t i) const {
  const std::size_t m = size();
  if (i >= m) throw InvalidArgument("basis: index out of range");
  double s = 0.0;
  for (std::size_t c = 0; c < m; ++c) s += inverse_[i * m + c] * w[c];
  return s;
}

std::vector<double> Basis::coefficients(const Vector& w) const {
  if (w.dim() != size()) throw DimensionMismatch("basis: vector dimension does not match the basis");
  std::vector<double> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = coefficient(w.coords(), i);
  return out;
}

Vector Basis::functional(std::size_t i) const {
  const std::size_t m = size();
  if (i >= m) throw InvalidArgument("basis: index out of range");
  return Vector(std::vector<double>(inverse_.begin() + static_cast<long>(i * m),
                                    inverse_.begin() + static_cast<long>((i + 1) * m)));
}

namespace {

std::vector<double> gaussian(std::mt19937_64& rng, std::size_t m) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> v(m);
  for (;;) {
    double s = 0.0;
    for (auto& x : v) {
      x = g(rng);
      s += x * x;
    }
    if (s > 1e-20) {
      for (auto& x : v) x /= std::sqrt(s);
      return v;
    }
  }
}

void euclid_normalize(std::vector<double>& w) {
  double s = 0.0;
  for (double x : w) s += x * x;
  s = std::sqrt(s);
  for (auto& x : w) x /= s;
}

class RatioAscent {
 public:
  RatioAscent(const NormedSpace& space, const Basis& basis, std::size_t i, long budget)
      : space_(space), basis_(basis), i_(i), budget_(budget) {}

  double ratio(const std::vector<double>& w) {
    ++evaluations;
    double n = space_.norm(w);
    if (!(n > 0.0)) return -kInf;
    return basis_.coefficient(w, i_) / n;
  }

  bool exhausted() const { return evaluations >= budget_; }

  /// Pattern ascent from w; returns false when stopped by the budget.
  bool ascend(std::vector<double>& w, double& r, std::mt19937_64& rng) {
    const std::size_t m = w.size();
    euclid_normalize(w);
    r = ratio(w);
    double step = 0.25;
    std::vector<double> trial(m);
    while (step > 1e-13) {
      if (exhausted()) return false;
      bool improved = false;
      auto attempt = [&](const std::vector<double>& dir, double s) {
        for (std::size_t k = 0; k < m; ++k) trial[k] = w[k] + s * dir[k];
        double rt = ratio(trial);
        if (rt > r) {
          w = trial;
          r = rt;
          improved = true;
        }
      };
      std::vector<double> axis(m, 0.0);
      for (std::size_t j = 0; j < m; ++j) {
        axis.assign(m, 0.0);
        axis[j] = 1.0;
        attempt(axis, step);
        attempt(axis, -step);
      }
      for (std::size_t k = 0; k < std::max<std::size_t>(2, m); ++k) {
        std::vector<double> d = gaussian(rng, m);
        attempt(d, step);
        attempt(d, -step);
      }
      if (improved) {
        euclid_normalize(w);
      } else {
        step *= 0.5;
      }
    }
    return true;
  }

  long evaluations = 0;

 private:
  const NormedSpace& space_;
  const Basis& basis_;
  std::size_t i_;
  long budget_;
};

}  // namespace

MaxCoefficient max_coefficient(const NormedSpace& space, const Basis& basis, std::size_t i, long budget,
                               std::uint64_t seed) {
  const std::size_t m = basis.size();
  if (i >= m) throw InvalidArgument("max_coefficient: index out of range");
  if (budget < 1) throw InvalidArgument("max_coefficient: budget must be positive");
  RatioAscent asc(space, basis, i, budget);
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + i);

  std::vector<std::vector<double>> starts;
  starts.push_back(basis[i].values());
  starts.push_back(basis.functional(i).values());
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> u(m, 0.0);
    u[j] = 1.0;
    starts.push_back(u);
    u[j] = -1.0;
    starts.push_back(u);
  }
  if (m == 2) {
    // Angle sweep at 0.01° then golden refinement of the best cell.
    const std::size_t n = 36000;
    double best_a = 0.0;
    double best_r = -kInf;
    std::vector<double> w(2);
    for (std::size_t k = 0; k < n; ++k) {
      double a = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
      w = {std::cos(a), std::sin(a)};
      double r = asc.ratio(w);
      if (r > best_r) {
        best_r = r;
        best_a = a;
      }
    }
    const double cell = 2.0 * std::numbers::pi / n;
    auto neg = [&](double a) {
      w = {std::cos(a), std::sin(a)};
      return -asc.ratio(w);
    };
    auto g = numeric::golden_section(neg, best_a - cell, best_a + cell, 1e-15);
    starts.push_back({std::cos(g.x), std::sin(g.x)});
  }
  for (int k = 0; k < 8; ++k) starts.push_back(gaussian(rng, m));

  MaxCoefficient out;
  out.index = i;
  std::vector<double> best;
  double best_r = -kInf;
  for (auto& s : starts) {
    if (asc.exhausted()) {
      out.converged = false;
      break;
    }
    double r = 0.0;
    if (!asc.ascend(s, r, rng)) out.converged = false;
    if (r > best_r) {
      best_r = r;
      best = s;
    }
  }
  Vector z = normalize(space, Vector(best));
  out.maximizer = z;
  out.value = basis.coefficient(z.coords(), i);
  out.evaluations = asc.evaluations;
  return out;
}

UniquenessResult uniqueness_probe(const NormedSpace& space, const Basis& basis, std::size_t i, double max_si,
                                  const Vector& maximizer, std::size_t num_samples, std::uint64_t seed) {
  const std::size_t m = basis.size();
  if (i >= m) throw InvalidArgument("uniqueness_probe: index out of range");
  UniquenessResult res;
  if (m < 2) return res;
  std::mt19937_64 rng(seed * 0x2545F4914F6CDD1DULL + i);
  const Tolerances tol{1e-9, 1e-6, 1e-9};

  auto direction = [&](std::size_t k) {
    std::vector<double> d(m, 0.0);
    std::size_t others = m - 1;
    if (k < others) {
      std::size_t j = k < i ? k : k + 1;
      d = basis[j].values();
    } else {
      std::vector<double> c = gaussian(rng, m);
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        for (std::size_t r = 0; r < m; ++r) d[r] += c[j] * basis[j][r];
      }
    }
    return Vector(d);
  };

  const std::size_t total = std::max(num_samples, m - 1);
  for (std::size_t k = 0; k < total; ++k) {
    Vector d = direction(k);
    if (d.is_zero()) continue;
    ++res.samples;
    OrthogonalityVerdict v = classify(space, maximizer, d, tol);
    if (v.relation != Relation::BirkhoffOnly) continue;
    Vector y = normalize(space, maximizer + d * v.witness);
    if (basis.coefficient(y.coords(), i) >= max_si - 1e-7 && eval_norm(space, y - maximizer) >= 1e-3) {
      res.unique = false;
      res.witness = y;
      break;
    }
  }
  return res;
}

DirectResult strongly_orthonormal_direct(const NormedSpace& space, const Basis& basis, double tol, double arg_tol,
                                         std::uint64_t seed, long budget) {
  const std::size_t m = basis.size();
  DirectResult out;
  out.per_index.resize(m);
  Tolerances ctol{tol, arg_tol, 1e-9};

  numeric::parallel_for(m, [&](std::size_t i) {
    DirectIndexResult& rec = out.per_index[i];
    rec.index = i;
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) others.push_back(j);
    }
    const std::size_t k = others.size();
    auto point = [&](const std::vector<double>& lam) {
      Vector p = basis[i];
      for (std::size_t a = 0; a < k; ++a) p = p + basis[others[a]] * lam[a];
      return p;
    };
    rec.min_value = 1.0;
    rec.min_lambda.assign(k, 0.0);
    if (k == 0) return;

    std::mt19937_64 rng(seed * 0xD1B54A32D192ED03ULL + i);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    long evals = 0;

    std::vector<std::vector<double>> starts;
    starts.emplace_back(k, 0.0);
    for (int s = 0; s < 4; ++s) {
      std::vector<double> lam(k);
      for (auto& v : lam) v = box(rng);
      starts.push_back(lam);
    }
    for (auto& lam : starts) {
      Vector p = point(lam);
      double val = eval_norm(space, p);
      for (int round = 0; round < 200 && evals < budget; ++round) {
        bool improved = false;
        std::vector<std::vector<double>> dirs;
        for (std::size_t a = 0; a < k; ++a) {
          std::vector<double> c(k, 0.0);
          c[a] = 1.0;
          dirs.push_back(c);
        }
        if (k > 1) {
          for (int r = 0; r < 2; ++r) dirs.push_back(gaussian(rng, k));
        }
        for (const auto& c : dirs) {
          Vector d = point(c) - basis[i];
          if (d.is_zero()) continue;
          MinimizationResult mr = directional_min(space, p, d);
          evals += mr.evaluations;
          if (mr.min_value < val - 1e-15) {
            for (std::size_t a = 0; a < k; ++a) lam[a] = std::clamp(lam[a] + mr.argmin * c[a], -2.0, 2.0);
            p = point(lam);
            val = eval_norm(space, p);
            improved = true;
          }
        }
        if (!improved) break;
      }
      if (val < rec.min_value) {
        rec.min_value = val;
        rec.min_lambda = lam;
      }
    }

    // Flatness of the sphere at e_i inside the span of the others.
    const std::size_t flat_dirs = k + (k > 1 ? 64 : 0);
    for (std::size_t s = 0; s < flat_dirs && !rec.flat; ++s) {
      std::vector<double> c(k, 0.0);
      if (s < k) c[s] = 1.0; else c = gaussian(rng, k);
      Vector d = point(c) - basis[i];
      if (d.is_zero()) continue;
      OrthogonalityVerdict v = classify(space, basis[i], d, ctol);
      if (v.relation == Relation::BirkhoffOnly) {
        rec.flat = true;
        rec.flat_lambda.resize(k);
        for (std::size_t a = 0; a < k; ++a) rec.flat_lambda[a] = v.witness * c[a];
      }
    }
    rec.strongly_orthogonal = rec.min_value >= 1.0 - tol && !rec.flat;
  });

  for (const auto& r : out.per_index) {
    if (!r.strongly_orthogonal) {
      out.verdict = false;
      if (!out.worst_index) out.worst_index = r.index;
    }
  }
  return out;
}

CriterionResult strongly_orthonormal_criterion(const NormedSpace& space, const Basis& basis, long budget, double tol,
                                               std::uint64_t seed) {
  CriterionResult out;
  const std::size_t m = basis.size();
  out.max_coefficients.resize(m);
  numeric::parallel_for(m, [&](std::size_t i) { out.max_coefficients[i] = max_coefficient(space, basis, i, budget, seed); });
  for (const auto& mc : out.max_coefficients) {
    if (mc.value > 1.0 + tol) out.verdict = false;
  }
  ConvexityProbeOptions po;
  po.seed = seed;
  out.hypothesis_verified = strict_convexity_probe(space, po).verdict == ConvexityVerdict::NoFlatFound;
  return out;
}

BasisReport basis_report(const NormedSpace& space, const Basis& basis, const BasisOptions& opts) {
  BasisReport rep;
  rep.space = space.name();
  rep.basis = basis.vectors();
  CriterionResult crit = strongly_orthonormal_criterion(space, basis, opts.budget, opts.tol, opts.seed);
  for (const auto& mc : crit.max_coefficients) {
    BasisIndexRecord r;
    r.index = mc.index;
    r.max_si = mc.value;
    r.maximizer = mc.maximizer;
    r.converged = mc.converged;
    UniquenessResult u =
        uniqueness_probe(space, basis, mc.index, mc.value, mc.maximizer, opts.uniqueness_samples, opts.seed);
    r.unique = u.unique;
    r.uniqueness_witness = u.witness;
    rep.per_index.push_back(std::move(r));
  }
  rep.direct = strongly_orthonormal_direct(space, basis, opts.tol, opts.arg_tol, opts.seed, opts.budget);
  rep.verdict_direct = rep.direct.verdict;
  rep.verdict_criterion = crit.verdict;
  rep.agreement = rep.verdict_direct == rep.verdict_criterion;
  rep.hypothesis_verified = crit.hypothesis_verified;
  return rep;
}

}  // namespace mgeo
