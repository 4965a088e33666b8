#pragma once
// 2D/3D vector primitives, quaternions, and polyline geometry shared across
// the pattern model, meshing, and evaluation code.

#include <cmath>
#include <vector>

namespace seamflow {

struct Vec2 {
  double x = 0.0, y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  bool operator==(const Vec2&) const = default;

  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline Vec2 lerp(Vec2 a, Vec2 b, double t) { return a + (b - a) * t; }

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  bool operator==(const Vec3&) const = default;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Unit quaternion (w, x, y, z).
struct Quat {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

  Quat normalized() const {
    double n = norm();
    if (n == 0.0) return {1.0, 0.0, 0.0, 0.0};
    return {w / n, x / n, y / n, z / n};
  }

  // Canonical double-cover representative with w >= 0.
  Quat canonical() const {
    Quat q = normalized();
    if (q.w < 0.0) return {-q.w, -q.x, -q.y, -q.z};
    return q;
  }

  Vec3 rotate(Vec3 v) const {
    // v' = v + 2 * u x (u x v + w v), u = (x, y, z)
    Vec3 u{x, y, z};
    Vec3 t = cross(u, v) * 2.0;
    return v + t * w + cross(u, t);
  }

  static Quat axis_angle(Vec3 axis, double angle) {
    double n = axis.norm();
    if (n == 0.0) return {};
    double s = std::sin(angle * 0.5) / n;
    return Quat{std::cos(angle * 0.5), axis.x * s, axis.y * s, axis.z * s};
  }
};

inline Quat operator*(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

// Distance from p to segment [a, b].
inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  Vec2 ab = b - a;
  double len2 = ab.norm2();
  if (len2 == 0.0) return (p - a).norm();
  double t = dot(p - a, ab) / len2;
  t = std::fmin(1.0, std::fmax(0.0, t));
  return (p - (a + ab * t)).norm();
}

// Even-odd interior test against a closed polygon (last vertex connects to
// the first). Points exactly on the boundary may land on either side.
inline bool point_in_polygon(Vec2 p, const std::vector<Vec2>& poly) {
  bool inside = false;
  size_t n = poly.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    Vec2 a = poly[j], b = poly[i];
    if ((b.y > p.y) != (a.y > p.y)) {
      double xs = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
      if (p.x < xs) inside = !inside;
    }
  }
  return inside;
}

// Shoelace area; positive for counter-clockwise loops.
inline double polygon_signed_area(const std::vector<Vec2>& poly) {
  double a = 0.0;
  size_t n = poly.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) a += cross(poly[j], poly[i]);
  return 0.5 * a;
}

inline double polyline_length(const std::vector<Vec2>& pts, bool closed) {
  double len = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) len += (pts[i + 1] - pts[i]).norm();
  if (closed && pts.size() > 1) len += (pts.front() - pts.back()).norm();
  return len;
}

// True if the closed polygon has no self-intersections (adjacent segments may
// touch at their shared vertex).
bool polygon_is_simple(const std::vector<Vec2>& poly);

// Arc-length position lookup on an open polyline: point at fraction t in
// [0, 1] of the total length.
Vec2 polyline_point_at(const std::vector<Vec2>& pts, double t);

}  // namespace seamflow
