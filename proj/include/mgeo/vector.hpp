#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mgeo {

/// A finite-dimensional real vector with finite coordinates.
///
/// Every constructor and arithmetic operator rejects NaN/Inf results with
/// InvalidArgument, so a live Vector always satisfies the finiteness
/// invariant.
class Vector {
 public:
  explicit Vector(std::vector<double> coords);
  Vector(std::initializer_list<double> coords);

  static Vector zeros(std::size_t dim);
  static Vector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }
  const std::vector<double>& values() const { return coords_; }

  bool is_zero() const;
  double euclidean_norm() const;
  double dot(const Vector& other) const;

  Vector operator+(const Vector& other) const;
  Vector operator-(const Vector& other) const;
  Vector operator-() const;
  Vector operator*(double s) const;
  Vector operator/(double s) const;

  bool operator==(const Vector& other) const = default;

  std::string to_string() const;

 private:
  std::vector<double> coords_;
};

inline Vector operator*(double s, const Vector& v) { return v * s; }

/// Parses "a,b,c" into a Vector; throws InvalidArgument on malformed text.
Vector parse_vector(const std::string& text);

void require_same_dim(const Vector& a, const Vector& b, const char* what);

}  // namespace mgeo
