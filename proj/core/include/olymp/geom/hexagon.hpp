#pragma once

#include <olymp/geom/primitives.hpp>
#include <olymp/rng.hpp>

#include <array>

namespace olymp::geom {

/**
 * A convex hexagon ABCDEF whose opposite sides are parallel
 * (AB || DE, BC || EF, CD || FA) with equal opposite-side products
 * (AB*DE == BC*EF == CD*FA), and with every opposite-side pair of distinct
 * lengths (the equal-length case degenerates the derived points below).
 */
struct Hexagon {
    std::array<Point, 6> v{};  // A, B, C, D, E, F in order

    const Point& A() const { return v[0]; }
    const Point& B() const { return v[1]; }
    const Point& C() const { return v[2]; }
    const Point& D() const { return v[3]; }
    const Point& E() const { return v[4]; }
    const Point& F() const { return v[5]; }

    std::array<double, 6> side_lengths() const;  // AB, BC, CD, DE, EF, FA
    double scale() const;                        // largest vertex-to-vertex distance
};

struct HexagonValidation {
    bool convex = false;
    bool closed = true;               // vertices are finite and distinct
    double parallel_defect = 0.0;     // max |sin| between opposite side directions
    bool parallel_ok = false;         // defect < 1e-10
    double product_spread = 0.0;      // relative spread of the three products
    bool products_ok = false;         // spread < 1e-10
    double min_length_gap = 0.0;      // min relative |AB - DE| over opposite pairs
    bool lengths_differ = false;      // gap > 1e-8

    bool valid() const { return convex && closed && parallel_ok && products_ok && lengths_differ; }
};

HexagonValidation validate_hexagon(const Hexagon& hex);

/**
 * Constructs the hexagon from three pairwise independent side directions
 * u, v, w (sides AB, BC, CD run along +u, +v, +w and DE, EF, FA along the
 * negatives), the common opposite-side product c > 0, and the length
 * asymmetry t != 0.  Closure forces the opposite side-length differences to
 * be proportional to (cross(v,w), cross(w,u), cross(u,v)); `t` is that
 * proportionality factor.  Each length pair is recovered from its
 * difference d and product c as ((d + sqrt(d^2 + 4c))/2, same - d).
 * `anchor` places vertex A.  Throws std::invalid_argument if the directions
 * are pairwise parallel, c <= 0, t == 0, or some forced length is not
 * positive; the result is validated and must pass.
 */
Hexagon make_hexagon(const Vec2& u, const Vec2& v, const Vec2& w, double c, double t,
                     const Point& anchor = {0.0, 0.0});

/// Random valid hexagon: directions from a convex angular fan, random
/// product and asymmetry, random anchor.  Retries internally (budget 100).
Hexagon sample_hexagon(Rng& rng);

/// Derived points used by the verification (each primed point completes a
/// parallelogram on three consecutive vertices).
struct DerivedPoints {
    Point Ap, Bp, Cp, Dp, Ep, Fp;  // A', ..., F'
};

DerivedPoints derived_points(const Hexagon& hex);

struct HexagonReport {
    // Main statement: the orthocenter of the midpoint triangle XYZ
    // (X, Y, Z midpoints of AD, BE, CF) is the midpoint of the circumcenters
    // of ACE and BDF; in particular the three points are collinear.
    Point O1, O2, H;
    double midpoint_deviation = 0.0;   // |H - midpoint(O1, O2)|
    double collinearity_area = 0.0;    // |signed area of (O1, O2, H)|
    bool midpoint_ok = false;          // deviation < tol * scale
    bool collinear_ok = false;         // area < 1e-9 * scale^2

    // Parallelogram identity: A' - D' == E' - B' == C' - F'
    // (the common value is A - B + C - D + E - F).
    double translate_deviation = 0.0;  // max pairwise difference
    bool translate_ok = false;         // deviation < 1e-9 * scale

    // Each original vertex is collinear with two derived points, and its
    // power against the derived circumcircles (A'C'E' for A, C, E; B'D'F'
    // for B, D, F) equals the signed product along that line, whose
    // magnitude is the common opposite-side product.
    double power_deviation = 0.0;      // max |circle power - collinear product| / scale^2
    double product_deviation = 0.0;    // max ||product| - opposite-side product| / scale^2
    bool power_ok = false;             // both deviations < 1e-8

    double scale = 0.0;
    bool all_pass() const {
        return midpoint_ok && collinear_ok && translate_ok && power_ok;
    }
};

/// Verifies the statement and supporting identities; `tol` is relative to
/// hex.scale() and applies to the midpoint deviation.
HexagonReport verify_hexagon(const Hexagon& hex, double tol);

}  // namespace olymp::geom
