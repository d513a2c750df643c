#pragma once

#include <olymp/geom/primitives.hpp>
#include <olymp/rng.hpp>

#include <string>
#include <vector>

namespace olymp::geom {

/**
 * An acute triangle ABC with a rectangle erected outward on each side:
 *   on BC with height h_a:  B C C1 B2   (C1 beyond C, B2 beyond B)
 *   on CA with height h_b:  C A A1 C2   (A1 beyond A, C2 beyond C)
 *   on AB with height h_c:  A B B1 A2   (B1 beyond B, A2 beyond A)
 * "Outward" means each rectangle extends away from the opposite vertex.
 *
 * The apex angle a rectangle of height h on a side of length s subtends at
 * its far corner is atan(s / h); the configurations of interest have the
 * three apex angles summing to a straight angle, which makes the lines
 * B1C2, C1A2, A1B2 concurrent.
 */
struct RectConfig {
    Point A, B, C;
    double ha = 0.0, hb = 0.0, hc = 0.0;

    // Outer rectangle corners (see naming above).
    Point B2, C1;  // on BC
    Point C2, A1;  // on CA
    Point A2, B1;  // on AB

    double side_a() const { return distance(B, C); }
    double side_b() const { return distance(C, A); }
    double side_c() const { return distance(A, B); }

    /// Length scale for tolerances: the largest side or height.
    double scale() const;

    /// atan(a/ha) + atan(b/hb) + atan(c/hc).
    double apex_angle_sum() const;
};

/**
 * Given two apex angles via (side, height) pairs, returns the height on the
 * third side that makes the apex angles sum to a straight angle.  Throws
 * std::domain_error unless the forced third angle is strictly between 0 and
 * a right angle, matching rectangles of positive height.
 */
double solve_third_height(double a, double b, double c, double ha, double hb);

/// Builds the rectangle corners from triangle and heights.  Throws
/// std::invalid_argument on non-positive heights or degenerate triangle.
/// Performs no acuteness or angle-sum validation (see validate_config).
RectConfig make_config_unchecked(const Point& A, const Point& B, const Point& C, double ha,
                                 double hb, double hc);

struct ConfigValidation {
    bool acute = false;
    bool heights_positive = false;
    double angle_sum_defect = 0.0;  // |apex angle sum - pi|
    bool angle_sum_ok = false;      // defect < 1e-12 * pi

    bool valid() const { return acute && heights_positive && angle_sum_ok; }
};

ConfigValidation validate_config(const RectConfig& cfg);

/// make_config_unchecked + validation; throws std::invalid_argument with
/// the failed condition when invalid.
RectConfig make_config(const Point& A, const Point& B, const Point& C, double ha, double hb,
                       double hc);

struct ConcurrencyReport {
    // Pairwise intersections of lines B1C2, C1A2, A1B2.
    Point x12, x13, x23;
    double spread = 0.0;  // max pairwise distance between the intersections

    // Candidate concurrency point: foot of the perpendicular from A onto
    // line B1C2 (it must agree with the intersections).
    Point foot;
    double foot_deviation = 0.0;  // max distance from foot to an intersection

    // Distance defects |dist(P, center) - radius| of the concurrency point
    // against the three rectangle circumcircles.
    double circle_deviation = 0.0;

    double scale = 0.0;
    bool concurrent = false;    // spread < tol * scale
    bool on_circles = false;    // circle_deviation < tol * scale
    bool foot_matches = false;  // foot_deviation < tol * scale

    bool all_pass() const { return concurrent && on_circles && foot_matches; }
};

/**
 * Measures the concurrency of lines B1C2, C1A2, A1B2 and the incidence of
 * the common point with the three rectangle circumcircles.  `tol` is
 * relative to cfg.scale().  Throws std::domain_error if any of the three
 * lines are (near-)parallel, which does not occur for valid configurations.
 */
ConcurrencyReport verify_concurrency(const RectConfig& cfg, double tol);

/**
 * Random valid configuration: an acute triangle in general position (random
 * rotation and offset) with two random apex angles and the third height
 * solved to balance the sum.  The angle-sum condition therefore holds to
 * machine precision by construction.
 */
RectConfig sample_config(Rng& rng);

}  // namespace olymp::geom
