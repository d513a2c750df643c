#include <doctest.h>

#include <olymp/geom/primitives.hpp>
#include <olymp/rng.hpp>

#include <cmath>
#include <stdexcept>

using olymp::geom::Circle;
using olymp::geom::circumcenter;
using olymp::geom::circumcircle;
using olymp::geom::cross;
using olymp::geom::distance;
using olymp::geom::dot;
using olymp::geom::foot_of_perpendicular;
using olymp::geom::line_intersection;
using olymp::geom::midpoint;
using olymp::geom::orthocenter;
using olymp::geom::Point;
using olymp::geom::rotate;
using olymp::geom::signed_area;
using olymp::geom::Vec2;
using olymp::Rng;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

Point random_point(Rng& rng, double radius) {
    return {rng.uniform(-radius, radius), rng.uniform(-radius, radius)};
}

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("vector algebra basics") {
    const Vec2 v{3.0, 4.0};
    CHECK_EQ(v.norm(), 5.0);
    CHECK_EQ(v.norm_sq(), 25.0);
    CHECK_EQ(dot(v, v.perp()), 0.0);
    CHECK_EQ(cross(Vec2{1, 0}, Vec2{0, 1}), 1.0);
    CHECK_EQ(cross(Vec2{0, 1}, Vec2{1, 0}), -1.0);
    CHECK(std::abs(v.normalized().norm() - 1.0) < 1e-15);
    CHECK_THROWS_AS(Vec2{}.normalized(), std::domain_error);
    CHECK_EQ(distance({0, 0}, {3, 4}), 5.0);
    const Point mid = midpoint({1, 1}, {3, 5});
    CHECK_EQ(mid.x, 2.0);
    CHECK_EQ(mid.y, 3.0);
}

TEST_CASE("rotation preserves length and turns by the requested angle") {
    const Vec2 image = rotate({1.0, 0.0}, kPi / 2.0);
    CHECK(std::abs(image.x) < 1e-15);
    CHECK(std::abs(image.y - 1.0) < 1e-15);
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const Vec2 v = random_point(rng, 10.0);
        const double angle = rng.uniform(-kPi, kPi);
        const Vec2 w = rotate(v, angle);
        CHECK(std::abs(w.norm() - v.norm()) < 1e-12);
        CHECK(std::abs(cross(v, w) - v.norm_sq() * std::sin(angle)) < 1e-10);
    }
}

TEST_CASE("line intersection solves the crossing and rejects parallels") {
    const Point p = line_intersection({0, 0}, {1, 1}, {2, 0}, {0, 1});
    CHECK(std::abs(p.x - 2.0) < 1e-14);
    CHECK(std::abs(p.y - 2.0) < 1e-14);
    CHECK_THROWS_AS(line_intersection({0, 0}, {1, 1}, {1, 0}, {2, 2}), std::domain_error);
}

TEST_CASE("the perpendicular foot is on the line and orthogonal to it") {
    const Point foot = foot_of_perpendicular({0, 1}, {-1, 0}, {1, 0});
    CHECK(std::abs(foot.x) < 1e-15);
    CHECK(std::abs(foot.y) < 1e-15);

    Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        const Point p = random_point(rng, 5.0);
        const Point a = random_point(rng, 5.0);
        Point b = random_point(rng, 5.0);
        if (distance(a, b) < 1e-6) {
            b.x += 1.0;
        }
        const Point f = foot_of_perpendicular(p, a, b);
        CHECK(std::abs(cross(b - a, f - a)) < 1e-9);  // on the line
        CHECK(std::abs(dot(b - a, p - f)) < 1e-9);    // perpendicular drop
    }
}

TEST_CASE("circumcenter of the right triangle is the hypotenuse midpoint") {
    const Point o = circumcenter({0, 0}, {1, 0}, {0, 1});
    CHECK(std::abs(o.x - 0.5) < 1e-14);
    CHECK(std::abs(o.y - 0.5) < 1e-14);
    const Circle c = circumcircle({0, 0}, {1, 0}, {0, 1});
    CHECK(std::abs(c.radius - std::sqrt(0.5)) < 1e-14);
    CHECK(std::abs(c.power({0, 0})) < 1e-14);
}

TEST_CASE("circumcircle is equidistant from random triangle corners") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        const Point a = random_point(rng, 10.0);
        const Point b = random_point(rng, 10.0);
        const Point c = random_point(rng, 10.0);
        if (std::abs(signed_area(a, b, c)) < 1e-3) {
            continue;  // skip nearly degenerate draws
        }
        const Circle circle = circumcircle(a, b, c);
        CHECK(std::abs(distance(circle.center, a) - circle.radius) < 1e-9);
        CHECK(std::abs(distance(circle.center, b) - circle.radius) < 1e-9);
        CHECK(std::abs(distance(circle.center, c) - circle.radius) < 1e-9);
    }
}

TEST_CASE("collinear points have no circumcircle") {
    CHECK_THROWS_AS(circumcenter({0, 0}, {1, 1}, {2, 2}), std::domain_error);
}

TEST_CASE("orthocenter of a right triangle is the right-angle corner") {
    const Point h = orthocenter({0, 0}, {1, 0}, {0, 1});
    CHECK(std::abs(h.x) < 1e-14);
    CHECK(std::abs(h.y) < 1e-14);
}

TEST_CASE("the equilateral triangle has a common center") {
    const Point a{0.0, 0.0};
    const Point b{1.0, 0.0};
    const Point c{0.5, std::sqrt(3.0) / 2.0};
    const Point centroid = (a + b + c) / 3.0;
    const Point o = circumcenter(a, b, c);
    const Point h = orthocenter(a, b, c);
    CHECK(distance(o, centroid) < 1e-14);
    CHECK(distance(h, centroid) < 1e-14);
}

TEST_CASE("circumcenter, centroid and orthocenter are collinear with ratio two") {
    // The two independent constructions must satisfy H - G = 2 (G - O),
    // which pins them against each other on every generic triangle.
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        const Point a = random_point(rng, 8.0);
        const Point b = random_point(rng, 8.0);
        const Point c = random_point(rng, 8.0);
        if (std::abs(signed_area(a, b, c)) < 1e-2) {
            continue;
        }
        const Point g = (a + b + c) / 3.0;
        const Point o = circumcenter(a, b, c);
        const Point h = orthocenter(a, b, c);
        const Vec2 lhs = h - g;
        const Vec2 rhs = (g - o) * 2.0;
        CHECK(distance(lhs, rhs) < 1e-8);
    }
}

TEST_CASE("the midpoint triangle's orthocenter is the original circumcenter") {
    Rng rng(34);
    for (int i = 0; i < 100; ++i) {
        const Point a = random_point(rng, 6.0);
        const Point b = random_point(rng, 6.0);
        const Point c = random_point(rng, 6.0);
        if (std::abs(signed_area(a, b, c)) < 1e-2) {
            continue;
        }
        const Point o = circumcenter(a, b, c);
        const Point h = orthocenter(midpoint(b, c), midpoint(c, a), midpoint(a, b));
        CHECK(distance(o, h) < 1e-8);
    }
}

TEST_CASE("power of a point is signed by containment") {
    const Circle circle{{0.0, 0.0}, 1.0};
    CHECK_EQ(circle.power({2.0, 0.0}), 3.0);
    CHECK_EQ(circle.power({0.0, 0.0}), -1.0);
    CHECK(std::abs(circle.power({1.0, 0.0})) < 1e-15);
}

TEST_SUITE_END();
