#pragma once

#include <cmath>

namespace olymp::geom {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Vec2& operator-=(const Vec2& o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }

    double norm_sq() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }

    /// Counter-clockwise quarter turn.
    Vec2 perp() const { return {-y, x}; }
    Vec2 normalized() const;
};

inline Vec2 operator*(double s, const Vec2& v) {
    return v * s;
}

using Point = Vec2;

inline double dot(const Vec2& a, const Vec2& b) {
    return a.x * b.x + a.y * b.y;
}

/// 2D cross product (z-component of the 3D cross product).
inline double cross(const Vec2& a, const Vec2& b) {
    return a.x * b.y - a.y * b.x;
}

inline double distance(const Point& a, const Point& b) {
    return (a - b).norm();
}

inline Point midpoint(const Point& a, const Point& b) {
    return (a + b) / 2.0;
}

/// Signed area of triangle abc (positive when counter-clockwise).
inline double signed_area(const Point& a, const Point& b, const Point& c) {
    return 0.5 * cross(b - a, c - a);
}

/// Rotation by `angle` about the origin applied to v.
Vec2 rotate(const Vec2& v, double angle);

/**
 * Intersection of the line through p with direction d and the line through
 * q with direction e.  Throws std::domain_error when the directions are
 * parallel relative to their magnitudes.
 */
Point line_intersection(const Point& p, const Vec2& d, const Point& q, const Vec2& e);

/// Orthogonal projection of p onto the line through a and b.
Point foot_of_perpendicular(const Point& p, const Point& a, const Point& b);

struct Circle {
    Point center;
    double radius = 0.0;

    /// |p - center|^2 - radius^2 (negative inside, zero on the circle).
    double power(const Point& p) const { return (p - center).norm_sq() - radius * radius; }
};

/// Circle through three non-collinear points (throws std::domain_error on
/// near-degenerate input).
Circle circumcircle(const Point& a, const Point& b, const Point& c);
Point circumcenter(const Point& a, const Point& b, const Point& c);

/// Intersection of two altitudes; deliberately not derived from the
/// circumcenter so the two constructions can be cross-checked.
Point orthocenter(const Point& a, const Point& b, const Point& c);

}  // namespace olymp::geom
