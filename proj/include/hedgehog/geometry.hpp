#pragma once

#include <cmath>

namespace hedgehog {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator-(Point2 p) { return {-p.x, -p.y}; }
inline Point2 operator*(double t, Point2 p) { return {t * p.x, t * p.y}; }
inline Point2 operator*(Point2 p, double t) { return {t * p.x, t * p.y}; }
inline Point2 operator/(Point2 p, double t) { return {p.x / t, p.y / t}; }
inline Point2& operator+=(Point2& a, Point2 b) { a.x += b.x; a.y += b.y; return a; }
inline Point2& operator-=(Point2& a, Point2 b) { a.x -= b.x; a.y -= b.y; return a; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// Outward unit normal u(s) = (cos s, sin s).
inline Point2 unit_dir(double s) { return {std::cos(s), std::sin(s)}; }

/// u(s) rotated a quarter turn counterclockwise: u'(s) = (-sin s, cos s).
inline Point2 unit_normal_rot(double s) { return {-std::sin(s), std::cos(s)}; }

/// Quarter-turn rotation about the origin: (x, y) -> (-y, x).
inline Point2 perp(Point2 p) { return {-p.y, p.x}; }

inline Point2 rotate(Point2 p, double alpha) {
    const double c = std::cos(alpha), s = std::sin(alpha);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

}  // namespace hedgehog
