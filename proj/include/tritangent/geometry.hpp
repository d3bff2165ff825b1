#pragma once

#include <cmath>

namespace tritangent {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

using Vec2 = Point2;

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double c, Point2 a) { return {c * a.x, c * a.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

inline double triangle_area(Point2 a, Point2 b, Point2 c) {
  return 0.5 * std::abs(cross(b - a, c - a));
}

// Orthonormal frame: local coordinates (u, v) map to origin + u*ex + v*ey.
struct Frame {
  Point2 origin{};
  Vec2 ex{1.0, 0.0};
  Vec2 ey{0.0, 1.0};

  Point2 to_world(Point2 local) const {
    return origin + local.x * ex + local.y * ey;
  }
  Point2 to_local(Point2 world) const {
    Vec2 d = world - origin;
    return {dot(d, ex), dot(d, ey)};
  }
};

inline Frame frame_from_tangent(Point2 origin, Vec2 tangent) {
  double n = norm(tangent);
  Vec2 ex{tangent.x / n, tangent.y / n};
  return Frame{origin, ex, Vec2{-ex.y, ex.x}};
}

}  // namespace tritangent
