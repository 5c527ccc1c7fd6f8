#include "mgeo/space.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>

#include "mgeo/error.hpp"

namespace mgeo {
namespace {

double lp_value(std::span<const double> v, double p) {
  if (p == 1.0) {
    double s = 0.0;
    for (double c : v) s += std::abs(c);
    return s;
  }
  double m = 0.0;
  for (double c : v) m = std::max(m, std::abs(c));
  if (p == kInf || m == 0.0) return m;
  double s = 0.0;
  if (p == 2.0) {
    for (double c : v) {
      double t = c / m;
      s += t * t;
    }
    return m * std::sqrt(s);
  }
  for (double c : v) s += std::pow(std::abs(c) / m, p);
  return m * std::pow(s, 1.0 / p);
}

std::string lp_name(double p) {
  if (p == kInf) return "linf";
  if (p == 1.0) return "l1";
  if (p == 2.0) return "l2";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p);
  return "lp:" + std::string(buf, ptr);
}

double parse_p(std::string_view text) {
  if (text == "inf" || text == "infinity") return kInf;
  double p = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("cannot parse p-norm exponent '" + std::string(text) + "'");
  }
  return p;
}

}  // namespace

NormedSpace::NormedSpace(std::size_t dim, NormForm form, std::string name)
    : dim_(dim), form_(std::move(form)), name_(std::move(name)) {}

NormedSpace NormedSpace::lp(double p, std::size_t dim) {
  if (std::isnan(p) || p < 1.0) throw InvalidSpace("p-norm requires p >= 1");
  if (dim < 1) throw InvalidSpace("dimension must be >= 1");
  return NormedSpace(dim, PNorm{p}, lp_name(p));
}

NormedSpace NormedSpace::polyhedral(std::vector<Vector> functionals) {
  if (functionals.empty()) throw InvalidSpace("polyhedral norm needs at least one functional");
  const std::size_t dim = functionals.front().dim();
  Eigen::MatrixXd m(functionals.size(), dim);
  for (std::size_t r = 0; r < functionals.size(); ++r) {
    if (functionals[r].dim() != dim) throw InvalidSpace("polyhedral functionals have mixed dimensions");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = functionals[r][c];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() < static_cast<Eigen::Index>(dim) || sv(dim - 1) <= 1e-10 * std::max(1.0, sv(0))) {
    throw InvalidSpace("polyhedral functionals do not span the space (seminorm, not a norm)");
  }
  return NormedSpace(dim, Polyhedral{std::move(functionals)}, "polyhedral");
}

NormedSpace NormedSpace::gauge(Gauge2DBoundary boundary, std::string name) {
  auto table = std::make_shared<const GaugeTable>(std::move(boundary));
  return NormedSpace(2, Gauge2D{std::move(table)}, std::move(name));
}

NormedSpace NormedSpace::with_name(std::string name) const {
  NormedSpace s = *this;
  s.name_ = std::move(name);
  return s;
}

std::optional<double> NormedSpace::p() const {
  if (const auto* pn = std::get_if<PNorm>(&form_)) return pn->p;
  return std::nullopt;
}

double NormedSpace::norm(std::span<const double> v) const {
  if (const auto* pn = std::get_if<PNorm>(&form_)) return lp_value(v, pn->p);
  if (const auto* poly = std::get_if<Polyhedral>(&form_)) {
    double m = 0.0;
    for (const auto& f : poly->functionals) {
      double s = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) s += f[i] * v[i];
      m = std::max(m, std::abs(s));
    }
    return m;
  }
  const auto& g = std::get<Gauge2D>(form_);
  return g.table->value(v[0], v[1]);
}

double eval_norm(const NormedSpace& space, const Vector& v) {
  if (v.dim() != space.dim()) {
    throw DimensionMismatch("vector of dimension " + std::to_string(v.dim()) + " in a space of dimension " +
                            std::to_string(space.dim()));
  }
  return space.norm(v.coords());
}

Vector normalize(const NormedSpace& space, const Vector& v) {
  double n = eval_norm(space, v);
  if (!(n > 0.0)) throw InvalidArgument("cannot normalize the zero vector");
  return v / n;
}

Vector sphere_point_2d(const NormedSpace& space, double theta) {
  if (space.dim() != 2) throw DimensionMismatch("sphere_point_2d requires a planar space");
  if (!std::isfinite(theta)) throw InvalidArgument("angle must be finite");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  if (const auto* g = std::get_if<Gauge2D>(&space.form())) {
    double r = g->table->radius(theta);
    return Vector{r * c, r * s};
  }
  Vector u{c, s};
  return u / space.norm(u.coords());
}

Gauge2DBoundary stadium_boundary() {
  const double r = std::numbers::sqrt2;
  const double q = std::numbers::pi / 4.0;
  return Gauge2DBoundary{{CircularArc{r, -q, q}, FlatLine{1.0, 1.0, -1.0}}, true};
}

Gauge2DBoundary quartic_cubic_boundary() {
  const double y1 = std::pow(1.0 - std::pow(1.0 / 3.0, 4.0), 0.25);
  const double y2 = -std::cbrt(1.0 - std::pow(0.25, 3.0));
  return Gauge2DBoundary{{SegmentArc{{0.25, y2}, {1.0 / 3.0, y1}},
                          ImplicitArc{"superellipse", {4.0}, 1.0 / 3.0, 0.0, 1},
                          ImplicitArc{"superellipse", {3.0}, 0.0, -0.25, 1}},
                         true};
}

std::vector<std::string> builtin_names() { return {"stadium", "quartic_cubic", "linf", "l1", "l2", "lp:<p>"}; }

std::vector<std::string> builtin_suite() {
  return {"stadium", "quartic_cubic", "linf", "l1", "l2", "lp:1.5", "lp:3", "lp:4"};
}

NormedSpace builtin_space(std::string_view name, std::size_t dim) {
  if (name == "stadium" || name == "quartic_cubic") {
    if (dim != 2) throw InvalidArgument("builtin space '" + std::string(name) + "' is planar");
    if (name == "stadium") return NormedSpace::gauge(stadium_boundary(), "stadium");
    return NormedSpace::gauge(quartic_cubic_boundary(), "quartic_cubic");
  }
  if (name == "linf") return NormedSpace::lp(kInf, dim);
  if (name == "l1") return NormedSpace::lp(1.0, dim);
  if (name == "l2") return NormedSpace::lp(2.0, dim);
  if (name.starts_with("lp:")) return NormedSpace::lp(parse_p(name.substr(3)), dim);
  if (name.starts_with("lp(") && name.ends_with(")")) {
    return NormedSpace::lp(parse_p(name.substr(3, name.size() - 4)), dim);
  }
  throw InvalidArgument("unknown builtin space '" + std::string(name) + "'");
}

NormValidationReport validate_norm(const NormedSpace& space, std::size_t sample_count, double tol,
                                   std::uint64_t seed) {
  if (sample_count < 1) throw InvalidArgument("sample_count must be >= 1");
  if (!(tol > 0.0)) throw InvalidArgument("tol must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t d = space.dim();

  auto random_vector = [&] {
    std::vector<double> c(d);
    double scale = std::pow(10.0, -3.0 + 6.0 * unit(rng));
    for (auto& x : c) x = gauss(rng) * scale;
    return Vector(std::move(c));
  };
  auto planar_sphere_sample = [&] {
    double theta = 2.0 * std::numbers::pi * unit(rng);
    return sphere_point_2d(space, theta) * std::pow(10.0, -1.0 + 2.0 * unit(rng));
  };

  AxiomCheck hom{"homogeneity", true, 0.0, {}};
  AxiomCheck tri{"triangle", true, 0.0, {}};
  AxiomCheck pos{"positive_definite", true, 0.0, {}};

  if (space.norm(Vector::zeros(d).coords()) != 0.0) {
    pos.passed = false;
    pos.worst_violation = 1.0;
    pos.witness = {Vector::zeros(d)};
  }

  for (std::size_t k = 0; k < sample_count; ++k) {
    Vector v = random_vector();
    double alpha = (unit(rng) < 0.5 ? -1.0 : 1.0) * std::pow(10.0, -3.0 + 6.0 * unit(rng));
    double nv = eval_norm(space, v);
    double lhs = eval_norm(space, v * alpha);
    double hv = std::abs(lhs - std::abs(alpha) * nv) / std::max(1.0, std::abs(alpha) * nv);
    if (hv > hom.worst_violation) {
      hom.worst_violation = hv;
      if (hv > tol) hom.witness = {v, Vector{alpha}};
    }

    if (!(nv > 0.0) && pos.worst_violation < 1.0) {
      pos.worst_violation = 1.0;
      pos.witness = {v};
    }

    bool planar = d == 2 && (k % 2 == 1);
    Vector a = planar ? planar_sphere_sample() : random_vector();
    Vector b = planar ? planar_sphere_sample() : random_vector();
    double na = eval_norm(space, a);
    double nb = eval_norm(space, b);
    double tv = (eval_norm(space, a + b) - na - nb) / std::max(1e-300, na + nb);
    if (tv > tri.worst_violation) {
      tri.worst_violation = tv;
      if (tv > tol) tri.witness = {a, b};
    }
  }

  NormValidationReport rep;
  rep.samples = sample_count;
  for (AxiomCheck* c : {&hom, &tri, &pos}) {
    c->passed = c->worst_violation <= tol;
    if (c->passed) c->witness.clear();
    rep.passed = rep.passed && c->passed;
    rep.axioms.push_back(*c);
  }
  return rep;
}

}  // namespace mgeo
