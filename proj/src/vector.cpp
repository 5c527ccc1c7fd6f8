#include "mgeo/vector.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "mgeo/error.hpp"

namespace mgeo {
namespace {

void check_finite(const std::vector<double>& c) {
  for (double v : c) {
    if (!std::isfinite(v)) throw InvalidArgument("vector has a non-finite coordinate");
  }
}

}  // namespace

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidArgument("vector must have dimension >= 1");
  check_finite(coords_);
}

Vector::Vector(std::initializer_list<double> coords) : Vector(std::vector<double>(coords)) {}

Vector Vector::zeros(std::size_t dim) { return Vector(std::vector<double>(dim, 0.0)); }

Vector Vector::unit(std::size_t dim, std::size_t index) {
  std::vector<double> c(dim, 0.0);
  if (index >= dim) throw InvalidArgument("unit vector index out of range");
  c[index] = 1.0;
  return Vector(std::move(c));
}

bool Vector::is_zero() const {
  for (double v : coords_) {
    if (v != 0.0) return false;
  }
  return true;
}

double Vector::euclidean_norm() const {
  double s = 0.0;
  for (double v : coords_) s += v * v;
  return std::sqrt(s);
}

double Vector::dot(const Vector& other) const {
  require_same_dim(*this, other, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * other.coords_[i];
  return s;
}

Vector Vector::operator+(const Vector& other) const {
  require_same_dim(*this, other, "addition");
  std::vector<double> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return Vector(std::move(c));
}

Vector Vector::operator-(const Vector& other) const {
  require_same_dim(*this, other, "subtraction");
  std::vector<double> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
  return Vector(std::move(c));
}

Vector Vector::operator-() const {
  std::vector<double> c(coords_);
  for (double& v : c) v = -v;
  return Vector(std::move(c));
}

Vector Vector::operator*(double s) const {
  std::vector<double> c(coords_);
  for (double& v : c) v *= s;
  return Vector(std::move(c));
}

Vector Vector::operator/(double s) const {
  std::vector<double> c(coords_);
  for (double& v : c) v /= s;
  return Vector(std::move(c));
}

std::string Vector::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

Vector parse_vector(const std::string& text) {
  std::vector<double> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(pos, comma - pos);
    // trim
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidArgument("empty coordinate in '" + text + "'");
    token = token.substr(b, e - b + 1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidArgument("cannot parse coordinate '" + token + "'");
    }
    c.push_back(v);
    pos = comma + 1;
  }
  return Vector(std::move(c));
}

void require_same_dim(const Vector& a, const Vector& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" +
                            std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace mgeo
