#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace jnr {

using Vec3 = std::array<double, 3>;
using Vec2 = std::array<double, 2>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double dist(const Vec3& a, const Vec3& b) { return norm(a - b); }

inline Vec3 normalized(const Vec3& a) {
  double n = norm(a);
  if (n < 1e-300) throw std::invalid_argument("cannot normalize a zero vector");
  return {a[0] / n, a[1] / n, a[2] / n};
}

// Unit vector in R^3; the constructor normalizes and rejects near-zero input.
struct Direction {
  Vec3 u;
  explicit Direction(const Vec3& v) : u(normalized(v)) {}
  Direction(double x, double y, double z) : Direction(Vec3{x, y, z}) {}
  double operator[](int i) const { return u[static_cast<size_t>(i)]; }
};

// Angle between two unit vectors, safe against rounding outside [-1,1].
inline double angle_between(const Vec3& a, const Vec3& b) {
  double c = dot(a, b) / (norm(a) * norm(b));
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c);
}

// Completes u to an orthonormal frame (u, t1, t2).
inline void tangent_frame(const Vec3& u, Vec3& t1, Vec3& t2) {
  Vec3 seed = std::abs(u[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  t1 = normalized(cross(u, seed));
  t2 = cross(u, t1);
}

inline double dot2(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
inline double norm2(const Vec2& a) { return std::hypot(a[0], a[1]); }
inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 operator*(double s, const Vec2& a) { return {s * a[0], s * a[1]}; }

}  // namespace jnr
