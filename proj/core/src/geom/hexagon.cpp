#include <olymp/geom/hexagon.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace olymp::geom {
namespace {

constexpr double kPi = std::numbers::pi;

// Relative measure of how far a and b are from parallel: |sin(angle)|.
double parallel_defect(const Vec2& a, const Vec2& b) {
    return std::abs(cross(a, b)) / (a.norm() * b.norm());
}

}  // namespace

std::array<double, 6> Hexagon::side_lengths() const {
    std::array<double, 6> lengths{};
    for (int i = 0; i < 6; ++i) {
        lengths[static_cast<std::size_t>(i)] =
            distance(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>((i + 1) % 6)]);
    }
    return lengths;
}

double Hexagon::scale() const {
    double best = 0.0;
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            best = std::max(best,
                            distance(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]));
        }
    }
    return best;
}

HexagonValidation validate_hexagon(const Hexagon& hex) {
    HexagonValidation result;

    std::array<Vec2, 6> sides{};
    for (int i = 0; i < 6; ++i) {
        sides[static_cast<std::size_t>(i)] =
            hex.v[static_cast<std::size_t>((i + 1) % 6)] - hex.v[static_cast<std::size_t>(i)];
    }
    for (const Vec2& s : sides) {
        if (!std::isfinite(s.x) || !std::isfinite(s.y) || s.norm() == 0.0) result.closed = false;
    }
    if (!result.closed) return result;

    // Convex: all turns in the same direction, no zero turns.
    int sign = 0;
    result.convex = true;
    for (int i = 0; i < 6; ++i) {
        const double turn =
            cross(sides[static_cast<std::size_t>(i)], sides[static_cast<std::size_t>((i + 1) % 6)]);
        const int s = turn > 0.0 ? 1 : (turn < 0.0 ? -1 : 0);
        if (s == 0 || (sign != 0 && s != sign)) {
            result.convex = false;
            break;
        }
        sign = s;
    }

    const auto lengths = hex.side_lengths();
    for (int i = 0; i < 3; ++i) {
        result.parallel_defect =
            std::max(result.parallel_defect, parallel_defect(sides[static_cast<std::size_t>(i)],
                                                             sides[static_cast<std::size_t>(i + 3)]));
    }
    result.parallel_ok = result.parallel_defect < 1e-10;

    const double p0 = lengths[0] * lengths[3];
    const double p1 = lengths[1] * lengths[4];
    const double p2 = lengths[2] * lengths[5];
    const double pmax = std::max({p0, p1, p2});
    const double pmin = std::min({p0, p1, p2});
    result.product_spread = (pmax - pmin) / pmax;
    result.products_ok = result.product_spread < 1e-10;

    result.min_length_gap = 1.0;
    for (int i = 0; i < 3; ++i) {
        const double a = lengths[static_cast<std::size_t>(i)];
        const double b = lengths[static_cast<std::size_t>(i + 3)];
        result.min_length_gap = std::min(result.min_length_gap, std::abs(a - b) / std::max(a, b));
    }
    result.lengths_differ = result.min_length_gap > 1e-8;
    return result;
}

Hexagon make_hexagon(const Vec2& u, const Vec2& v, const Vec2& w, double c, double t,
                     const Point& anchor) {
    if (c <= 0.0) throw std::invalid_argument("make_hexagon: side product must be positive");
    if (t == 0.0) {
        throw std::invalid_argument("make_hexagon: zero asymmetry makes opposite sides equal");
    }
    const Vec2 du = u.normalized();
    const Vec2 dv = v.normalized();
    const Vec2 dw = w.normalized();
    if (parallel_defect(du, dv) < 1e-9 || parallel_defect(dv, dw) < 1e-9 ||
        parallel_defect(du, dw) < 1e-9) {
        throw std::invalid_argument("make_hexagon: directions must be pairwise independent");
    }

    // Closure: p1*u + p2*v + p3*w - p4*u - p5*v - p6*w = 0 forces the length
    // differences (p1-p4, p2-p5, p3-p6) proportional to the kernel vector
    // (cross(v,w), cross(w,u), cross(u,v)).
    const double diff[3] = {t * cross(dv, dw), t * cross(dw, du), t * cross(du, dv)};
    double longer[3];
    double shorter[3];
    for (int i = 0; i < 3; ++i) {
        const double d = diff[i];
        const double root = std::sqrt(d * d + 4.0 * c);
        longer[i] = (d + root) / 2.0;   // the side in the first triple
        shorter[i] = longer[i] - d;     // its opposite
        if (!(longer[i] > 0.0) || !(shorter[i] > 0.0)) {
            throw std::invalid_argument("make_hexagon: forced side length is not positive");
        }
    }

    Hexagon hex;
    hex.v[0] = anchor;
    hex.v[1] = hex.v[0] + du * longer[0];   // AB along +u
    hex.v[2] = hex.v[1] + dv * longer[1];   // BC along +v
    hex.v[3] = hex.v[2] + dw * longer[2];   // CD along +w
    hex.v[4] = hex.v[3] - du * shorter[0];  // DE along -u
    hex.v[5] = hex.v[4] - dv * shorter[1];  // EF along -v
    // FA = hex.v[0] - hex.v[5] closes by construction (along -w).

    const auto validation = validate_hexagon(hex);
    if (!validation.valid()) {
        throw std::invalid_argument("make_hexagon: constructed hexagon failed validation");
    }
    return hex;
}

Hexagon sample_hexagon(Rng& rng) {
    constexpr double kMargin = 0.25;
    for (int attempt = 0; attempt < 100; ++attempt) {
        const double base = rng.uniform(0.0, 2.0 * kPi);
        const double g1 = rng.uniform(kMargin, kPi - 2.0 * kMargin);
        const double g2 = rng.uniform(kMargin, kPi - kMargin - g1);
        const Vec2 u = rotate({1.0, 0.0}, base);
        const Vec2 v = rotate({1.0, 0.0}, base + g1);
        const Vec2 w = rotate({1.0, 0.0}, base + g1 + g2);

        const double c = rng.uniform(0.5, 2.0);
        double t = rng.uniform(0.1, 1.0);
        if (rng.coin_flip()) t = -t;
        const Point anchor{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        try {
            return make_hexagon(u, v, w, c, t, anchor);
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::runtime_error("sample_hexagon: rejection budget exhausted");
}

DerivedPoints derived_points(const Hexagon& hex) {
    const Point &A = hex.A(), &B = hex.B(), &C = hex.C(), &D = hex.D(), &E = hex.E(),
                &F = hex.F();
    DerivedPoints d;
    d.Ep = A - B + C;  // completes parallelogram on A, B, C
    d.Fp = B - C + D;
    d.Ap = C - D + E;
    d.Bp = D - E + F;
    d.Cp = E - F + A;
    d.Dp = F - A + B;
    return d;
}

HexagonReport verify_hexagon(const Hexagon& hex, double tol) {
    HexagonReport report;
    report.scale = hex.scale();
    const double scale_sq = report.scale * report.scale;
    const Point &A = hex.A(), &B = hex.B(), &C = hex.C(), &D = hex.D(), &E = hex.E(),
                &F = hex.F();

    const Point X = midpoint(A, D);
    const Point Y = midpoint(B, E);
    const Point Z = midpoint(C, F);
    report.O1 = circumcenter(A, C, E);
    report.O2 = circumcenter(B, D, F);
    report.H = orthocenter(X, Y, Z);

    report.midpoint_deviation = distance(report.H, midpoint(report.O1, report.O2));
    report.midpoint_ok = report.midpoint_deviation < tol * report.scale;
    report.collinearity_area = std::abs(signed_area(report.O1, report.O2, report.H));
    report.collinear_ok = report.collinearity_area < 1e-9 * scale_sq;

    const DerivedPoints d = derived_points(hex);
    const Vec2 t1 = d.Ap - d.Dp;
    const Vec2 t2 = d.Ep - d.Bp;
    const Vec2 t3 = d.Cp - d.Fp;
    report.translate_deviation =
        std::max({(t1 - t2).norm(), (t1 - t3).norm(), (t2 - t3).norm()});
    report.translate_ok = report.translate_deviation < 1e-9 * report.scale;

    // Power of each original vertex against the derived circumcircles.  The
    // vertex is collinear with the two derived points named in each entry,
    // so the signed product of the two dot factors equals the circle power;
    // its magnitude is the opposite-side product for the adjacent sides.
    const auto lengths = hex.side_lengths();
    const Circle circle1 = circumcircle(d.Ap, d.Cp, d.Ep);
    const Circle circle2 = circumcircle(d.Bp, d.Dp, d.Fp);
    struct Check {
        const Circle* circle;
        Point vertex;
        Vec2 f1, f2;      // collinear factors: primed - vertex
        double product;   // expected |power|
    };
    const Check checks[6] = {
        {&circle1, A, d.Ep - A, d.Cp - A, lengths[1] * lengths[4]},  // BC * EF
        {&circle1, C, d.Ap - C, d.Ep - C, lengths[3] * lengths[0]},  // DE * AB
        {&circle1, E, d.Cp - E, d.Ap - E, lengths[5] * lengths[2]},  // FA * CD
        {&circle2, B, d.Fp - B, d.Dp - B, lengths[2] * lengths[5]},  // CD * FA
        {&circle2, D, d.Bp - D, d.Fp - D, lengths[4] * lengths[1]},  // EF * BC
        {&circle2, F, d.Dp - F, d.Bp - F, lengths[0] * lengths[3]},  // AB * DE
    };
    for (const Check& check : checks) {
        const double along = dot(check.f1, check.f2);  // signed collinear product
        const double power = check.circle->power(check.vertex);
        report.power_deviation =
            std::max(report.power_deviation, std::abs(power - along) / scale_sq);
        report.product_deviation =
            std::max(report.product_deviation, std::abs(std::abs(along) - check.product) / scale_sq);
    }
    report.power_ok = report.power_deviation < 1e-8 && report.product_deviation < 1e-8;
    return report;
}

}  // namespace olymp::geom
