#pragma once

#include <array>
#include <cmath>

namespace rispla {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

/// Row-major 3x3 matrix; only used to move whole scenes around in tests
/// and tooling.
using Mat3 = std::array<std::array<double, 3>, 3>;

Vec3 apply(const Mat3& m, const Vec3& v);

/// Rotation by `angle` radians about the (normalized) `axis`.
Mat3 rotation(const Vec3& axis, double angle);

}  // namespace rispla
