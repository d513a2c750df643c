#include <olymp/geom/primitives.hpp>

#include <stdexcept>

namespace olymp::geom {

Vec2 Vec2::normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("normalized: zero vector");
    return *this / n;
}

Vec2 rotate(const Vec2& v, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Point line_intersection(const Point& p, const Vec2& d, const Point& q, const Vec2& e) {
    const double denom = cross(d, e);
    if (std::abs(denom) <= 1e-14 * d.norm() * e.norm()) {
        throw std::domain_error("line_intersection: directions are (near-)parallel");
    }
    const double t = cross(q - p, e) / denom;
    return p + d * t;
}

Point foot_of_perpendicular(const Point& p, const Point& a, const Point& b) {
    const Vec2 ab = b - a;
    const double len_sq = ab.norm_sq();
    if (len_sq == 0.0) throw std::domain_error("foot_of_perpendicular: degenerate segment");
    const double t = dot(p - a, ab) / len_sq;
    return a + ab * t;
}

Circle circumcircle(const Point& a, const Point& b, const Point& c) {
    const Point o = circumcenter(a, b, c);
    return Circle{o, distance(o, a)};
}

Point circumcenter(const Point& a, const Point& b, const Point& c) {
    // Perpendicular-bisector conditions as a 2x2 linear system:
    //   2 (b - a) . o = |b|^2 - |a|^2
    //   2 (c - a) . o = |c|^2 - |a|^2
    const Vec2 u = b - a;
    const Vec2 v = c - a;
    const double det = 2.0 * cross(u, v);
    const double scale_sq = u.norm_sq() + v.norm_sq();
    if (std::abs(det) <= 1e-14 * scale_sq) {
        throw std::domain_error("circumcenter: points are (near-)collinear");
    }
    const double ru = b.norm_sq() - a.norm_sq();
    const double rv = c.norm_sq() - a.norm_sq();
    // Cramer's rule on [2u; 2v] o = [ru; rv].
    const double ox = (ru * (2.0 * v.y) - rv * (2.0 * u.y)) / (2.0 * det);
    const double oy = ((2.0 * u.x) * rv - (2.0 * v.x) * ru) / (2.0 * det);
    return {ox, oy};
}

Point orthocenter(const Point& a, const Point& b, const Point& c) {
    // Altitude from a: direction perpendicular to bc; altitude from b:
    // direction perpendicular to ca.
    const Vec2 da = (c - b).perp();
    const Vec2 db = (c - a).perp();
    return line_intersection(a, da, b, db);
}

}  // namespace olymp::geom
