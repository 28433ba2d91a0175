#pragma once

#include <array>
#include <cmath>

namespace eulerfv {

/// Fixed-size 3-vector. Components beyond the active spatial dimension
/// stay zero, so 1D/2D/3D share one storage type.
struct Vec3 {
  std::array<double, 3> c{0.0, 0.0, 0.0};

  Vec3() = default;
  Vec3(double x, double y, double z) : c{x, y, z} {}

  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline Vec3 operator+(Vec3 a, const Vec3& b) {
  for (int i = 0; i < 3; ++i) a[i] += b[i];
  return a;
}

inline Vec3 operator-(Vec3 a, const Vec3& b) {
  for (int i = 0; i < 3; ++i) a[i] -= b[i];
  return a;
}

inline Vec3 operator*(double s, Vec3 a) {
  for (int i = 0; i < 3; ++i) a[i] *= s;
  return a;
}

inline Vec3& operator+=(Vec3& a, const Vec3& b) {
  for (int i = 0; i < 3; ++i) a[i] += b[i];
  return a;
}

inline Vec3& operator-=(Vec3& a, const Vec3& b) {
  for (int i = 0; i < 3; ++i) a[i] -= b[i];
  return a;
}

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double squared_norm(const Vec3& a) { return dot(a, a); }

inline double norm(const Vec3& a) { return std::sqrt(squared_norm(a)); }

/// Unit vector along a coordinate axis, scaled by `sign`.
inline Vec3 axis_vector(int axis, double sign) {
  Vec3 v;
  v[axis] = sign;
  return v;
}

}  // namespace eulerfv
