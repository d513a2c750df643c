#include <doctest.h>

#include <olymp/geom/primitives.hpp>
#include <olymp/geom/rectangles.hpp>
#include <olymp/rng.hpp>

#include <cmath>
#include <stdexcept>

using olymp::geom::distance;
using olymp::geom::dot;
using olymp::geom::make_config;
using olymp::geom::make_config_unchecked;
using olymp::geom::Point;
using olymp::geom::RectConfig;
using olymp::geom::rotate;
using olymp::geom::sample_config;
using olymp::geom::solve_third_height;
using olymp::geom::validate_config;
using olymp::geom::verify_concurrency;
using olymp::Rng;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

RectConfig equilateral_config() {
    const double h = 1.0 / std::sqrt(3.0);
    return make_config({0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}, h, h, h);
}

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("the third height balances the apex angles to a straight angle") {
    // Equilateral with two apex angles of 60 degrees forces the third to 60,
    // so a unit side demands height 1/sqrt(3).
    const double h = 1.0 / std::sqrt(3.0);
    const double hc = solve_third_height(1.0, 1.0, 1.0, h, h);
    CHECK(hc == doctest::Approx(h).epsilon(1e-13));

    const RectConfig cfg = equilateral_config();
    CHECK(std::abs(cfg.apex_angle_sum() - kPi) < 1e-13);
}

TEST_CASE("no rectangle height can absorb two quarter-turn apex angles") {
    // Two 45-degree apex angles leave a right angle, which corresponds to a
    // rectangle of height zero: rejected.
    CHECK_THROWS_AS(solve_third_height(1.0, 1.0, 1.0, 1.0, 1.0), std::domain_error);
    // Even taller rectangles shrink both apex angles, pushing the third past
    // a right angle: just as impossible.
    CHECK_THROWS_AS(solve_third_height(1.0, 1.0, 1.0, 5.0, 5.0), std::domain_error);
    CHECK_THROWS_AS(solve_third_height(-1.0, 1.0, 1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("rectangle corners sit outward at the requested heights") {
    const RectConfig cfg = equilateral_config();
    const Point centroid = (cfg.A + cfg.B + cfg.C) / 3.0;

    // Corner naming: B2 beyond B and C1 beyond C on side BC, etc.
    CHECK(distance(cfg.B2, cfg.B) == doctest::Approx(cfg.ha).epsilon(1e-12));
    CHECK(distance(cfg.C1, cfg.C) == doctest::Approx(cfg.ha).epsilon(1e-12));
    CHECK(distance(cfg.C2, cfg.C) == doctest::Approx(cfg.hb).epsilon(1e-12));
    CHECK(distance(cfg.A1, cfg.A) == doctest::Approx(cfg.hb).epsilon(1e-12));
    CHECK(distance(cfg.A2, cfg.A) == doctest::Approx(cfg.hc).epsilon(1e-12));
    CHECK(distance(cfg.B1, cfg.B) == doctest::Approx(cfg.hc).epsilon(1e-12));

    // Outward means away from the triangle: corners are farther from the
    // centroid than the side endpoints they extend.
    CHECK_GT(distance(cfg.B2, centroid), distance(cfg.B, centroid));
    CHECK_GT(distance(cfg.C1, centroid), distance(cfg.C, centroid));
    CHECK_GT(distance(cfg.A1, centroid), distance(cfg.A, centroid));
    CHECK_GT(distance(cfg.B1, centroid), distance(cfg.B, centroid));

    // Each rectangle side is perpendicular to the triangle side it stands on.
    CHECK(std::abs(dot(cfg.B2 - cfg.B, cfg.C - cfg.B)) < 1e-12);
    CHECK(std::abs(dot(cfg.C1 - cfg.C, cfg.B - cfg.C)) < 1e-12);
}

TEST_CASE("validation separates acuteness, heights and the angle sum") {
    const auto good = validate_config(equilateral_config());
    CHECK(good.acute);
    CHECK(good.heights_positive);
    CHECK(good.angle_sum_ok);
    CHECK(good.valid());

    // A right triangle is rejected as not acute.
    const RectConfig right =
        make_config_unchecked({0, 0}, {1, 0}, {0, 1}, 0.5, 0.5, 0.5);
    CHECK_FALSE(validate_config(right).acute);
    CHECK_FALSE(validate_config(right).valid());

    // Breaking the angle sum is detected even on an acute triangle.
    RectConfig skewed = equilateral_config();
    const RectConfig bent = make_config_unchecked(skewed.A, skewed.B, skewed.C, skewed.ha,
                                                  skewed.hb, skewed.hc * 1.1);
    const auto report = validate_config(bent);
    CHECK(report.acute);
    CHECK_FALSE(report.angle_sum_ok);
    CHECK_GT(report.angle_sum_defect, 1e-3);

    CHECK_THROWS_AS(make_config({0, 0}, {1, 0}, {0, 1}, 0.5, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_config_unchecked({0, 0}, {1, 0}, {2, 0}, 1, 1, 1),
                    std::invalid_argument);  // collinear corners
    CHECK_THROWS_AS(make_config_unchecked({0, 0}, {1, 0}, {0, 1}, -1, 1, 1),
                    std::invalid_argument);
}

TEST_CASE("the three corner lines meet at one point on all three circles") {
    const auto report = verify_concurrency(equilateral_config(), 1e-9);
    CHECK(report.concurrent);
    CHECK(report.on_circles);
    CHECK(report.foot_matches);
    CHECK(report.all_pass());
    CHECK_LT(report.spread, 1e-9 * report.scale);
}

TEST_CASE("sampled configurations always pass the concurrency check") {
    Rng root(77);
    for (int i = 0; i < 50; ++i) {
        CAPTURE(i);
        Rng rng = root.split(static_cast<std::uint64_t>(i));
        const RectConfig cfg = sample_config(rng);
        CHECK(validate_config(cfg).valid());
        const auto report = verify_concurrency(cfg, 1e-7);
        CHECK(report.all_pass());
    }
}

TEST_CASE("concurrency survives rigid motions of the whole configuration") {
    Rng rng(123);
    const RectConfig cfg = sample_config(rng);
    const double angle = 1.234;
    const olymp::geom::Vec2 shift{54.3, -21.0};
    auto moved = [&](const Point& p) { return rotate(p, angle) + shift; };
    const RectConfig transported =
        make_config(moved(cfg.A), moved(cfg.B), moved(cfg.C), cfg.ha, cfg.hb, cfg.hc);
    const auto before = verify_concurrency(cfg, 1e-7);
    const auto after = verify_concurrency(transported, 1e-7);
    CHECK(before.all_pass());
    CHECK(after.all_pass());
    // The concurrency point rides along with the motion.
    CHECK_LT(distance(moved(before.x12), after.x12), 1e-6 * after.scale);
}

TEST_CASE("breaking the angle sum visibly breaks the concurrency") {
    Rng rng(31);
    const RectConfig cfg = sample_config(rng);
    const RectConfig bent =
        make_config_unchecked(cfg.A, cfg.B, cfg.C, cfg.ha, cfg.hb, cfg.hc * 1.05);
    const auto report = verify_concurrency(bent, 1e-7);
    CHECK_FALSE(report.concurrent);
    CHECK_GT(report.spread, 1e-3 * report.scale);
}

TEST_SUITE_END();
