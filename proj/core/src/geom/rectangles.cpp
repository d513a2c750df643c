#include <olymp/geom/rectangles.hpp>

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace olymp::geom {
namespace {

constexpr double kPi = std::numbers::pi;

// Unit normal of segment pq pointing away from the reference point.
Vec2 outward_normal(const Point& p, const Point& q, const Point& away_from) {
    Vec2 n = (q - p).perp().normalized();
    if (dot(n, away_from - p) > 0.0) n = -n;
    return n;
}

}  // namespace

double RectConfig::scale() const {
    return std::max({side_a(), side_b(), side_c(), ha, hb, hc});
}

double RectConfig::apex_angle_sum() const {
    return std::atan(side_a() / ha) + std::atan(side_b() / hb) + std::atan(side_c() / hc);
}

double solve_third_height(double a, double b, double c, double ha, double hb) {
    if (a <= 0.0 || b <= 0.0 || c <= 0.0) {
        throw std::invalid_argument("solve_third_height: side lengths must be positive");
    }
    if (ha <= 0.0 || hb <= 0.0) {
        throw std::invalid_argument("solve_third_height: heights must be positive");
    }
    const double theta_c = kPi - std::atan(a / ha) - std::atan(b / hb);
    if (!(theta_c > 0.0) || !(theta_c < kPi / 2.0)) {
        throw std::domain_error(
            "solve_third_height: remaining apex angle must be strictly between 0 and pi/2");
    }
    return c / std::tan(theta_c);
}

RectConfig make_config_unchecked(const Point& A, const Point& B, const Point& C, double ha,
                                 double hb, double hc) {
    if (ha <= 0.0 || hb <= 0.0 || hc <= 0.0) {
        throw std::invalid_argument("make_config_unchecked: heights must be positive");
    }
    const double area = std::abs(signed_area(A, B, C));
    const double scale_sq = (B - A).norm_sq() + (C - B).norm_sq() + (A - C).norm_sq();
    if (area <= 1e-14 * scale_sq) {
        throw std::invalid_argument("make_config_unchecked: degenerate triangle");
    }

    RectConfig cfg;
    cfg.A = A;
    cfg.B = B;
    cfg.C = C;
    cfg.ha = ha;
    cfg.hb = hb;
    cfg.hc = hc;

    const Vec2 na = outward_normal(B, C, A);
    cfg.B2 = B + na * ha;
    cfg.C1 = C + na * ha;

    const Vec2 nb = outward_normal(C, A, B);
    cfg.C2 = C + nb * hb;
    cfg.A1 = A + nb * hb;

    const Vec2 nc = outward_normal(A, B, C);
    cfg.A2 = A + nc * hc;
    cfg.B1 = B + nc * hc;
    return cfg;
}

ConfigValidation validate_config(const RectConfig& cfg) {
    ConfigValidation v;
    v.heights_positive = cfg.ha > 0.0 && cfg.hb > 0.0 && cfg.hc > 0.0;

    // Acute at every vertex: each dot product of adjacent edge vectors > 0.
    v.acute = dot(cfg.B - cfg.A, cfg.C - cfg.A) > 0.0 &&
              dot(cfg.A - cfg.B, cfg.C - cfg.B) > 0.0 &&
              dot(cfg.A - cfg.C, cfg.B - cfg.C) > 0.0;

    v.angle_sum_defect = std::abs(cfg.apex_angle_sum() - kPi);
    v.angle_sum_ok = v.angle_sum_defect < 1e-12 * kPi;
    return v;
}

RectConfig make_config(const Point& A, const Point& B, const Point& C, double ha, double hb,
                       double hc) {
    RectConfig cfg = make_config_unchecked(A, B, C, ha, hb, hc);
    const ConfigValidation v = validate_config(cfg);
    if (!v.heights_positive) throw std::invalid_argument("make_config: heights must be positive");
    if (!v.acute) throw std::invalid_argument("make_config: triangle must be acute");
    if (!v.angle_sum_ok) {
        throw std::invalid_argument("make_config: apex angles do not sum to a straight angle");
    }
    return cfg;
}

ConcurrencyReport verify_concurrency(const RectConfig& cfg, double tol) {
    ConcurrencyReport report;
    report.scale = cfg.scale();

    const Vec2 d1 = cfg.C2 - cfg.B1;  // line B1C2
    const Vec2 d2 = cfg.A2 - cfg.C1;  // line C1A2
    const Vec2 d3 = cfg.B2 - cfg.A1;  // line A1B2
    report.x12 = line_intersection(cfg.B1, d1, cfg.C1, d2);
    report.x13 = line_intersection(cfg.B1, d1, cfg.A1, d3);
    report.x23 = line_intersection(cfg.C1, d2, cfg.A1, d3);
    report.spread = std::max({distance(report.x12, report.x13),
                              distance(report.x12, report.x23),
                              distance(report.x13, report.x23)});

    report.foot = foot_of_perpendicular(cfg.A, cfg.B1, cfg.C2);
    report.foot_deviation = std::max({distance(report.foot, report.x12),
                                      distance(report.foot, report.x13),
                                      distance(report.foot, report.x23)});

    // Rectangle circumcircles: center at the rectangle centroid, radius half
    // the diagonal.  Measured against the candidate concurrency point.
    const Point p = report.x12;
    double circle_dev = 0.0;
    const Point rect_corners[3][2] = {{cfg.B, cfg.C1}, {cfg.C, cfg.A1}, {cfg.A, cfg.B1}};
    for (const auto& diag : rect_corners) {
        const Point center = midpoint(diag[0], diag[1]);
        const double radius = distance(diag[0], diag[1]) / 2.0;
        circle_dev = std::max(circle_dev, std::abs(distance(p, center) - radius));
    }
    report.circle_deviation = circle_dev;

    report.concurrent = report.spread < tol * report.scale;
    report.on_circles = report.circle_deviation < tol * report.scale;
    report.foot_matches = report.foot_deviation < tol * report.scale;
    return report;
}

RectConfig sample_config(Rng& rng) {
    constexpr double kMargin = 0.15;  // keeps angles away from degenerate limits
    for (int attempt = 0; attempt < 1000; ++attempt) {
        // Acute triangle via its angles.
        const double alpha = rng.uniform(kMargin, kPi / 2.0 - kMargin);
        const double beta = rng.uniform(kMargin, kPi / 2.0 - kMargin);
        const double gamma = kPi - alpha - beta;
        if (gamma <= kMargin || gamma >= kPi / 2.0 - kMargin) continue;

        // Law of sines with a random circumscale, then a random rigid motion.
        const double diameter = rng.uniform(1.0, 4.0);
        const double a = diameter * std::sin(alpha);
        const double b = diameter * std::sin(beta);
        const double c = diameter * std::sin(gamma);
        Point A{0.0, 0.0};
        Point B{c, 0.0};
        Point C{b * std::cos(alpha), b * std::sin(alpha)};
        const double spin = rng.uniform(0.0, 2.0 * kPi);
        const Vec2 offset{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        A = rotate(A, spin) + offset;
        B = rotate(B, spin) + offset;
        C = rotate(C, spin) + offset;

        // Two random apex angles; the third is forced by the straight-angle
        // condition and must stay strictly acute.
        const double theta_a = rng.uniform(kMargin, kPi / 2.0 - kMargin);
        const double theta_b = rng.uniform(kMargin, kPi / 2.0 - kMargin);
        const double theta_c = kPi - theta_a - theta_b;
        if (theta_c <= kMargin || theta_c >= kPi / 2.0 - kMargin) continue;

        const double ha = a / std::tan(theta_a);
        const double hb = b / std::tan(theta_b);
        const double hc = solve_third_height(a, b, c, ha, hb);
        return make_config(A, B, C, ha, hb, hc);
    }
    throw std::runtime_error("sample_config: rejection budget exhausted");
}

}  // namespace olymp::geom
