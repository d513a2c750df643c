#include <doctest.h>

#include <olymp/algebra/polynomial.hpp>

#include "oracles.hpp"

#include <complex>
#include <stdexcept>

using olymp::algebra::BivariatePoly;
using olymp::algebra::Int;
using olymp::algebra::IntPolynomial;
using olymp::algebra::verify_move_identity;

TEST_SUITE_BEGIN("algebra");

TEST_CASE("univariate construction normalizes trailing zeros") {
    const IntPolynomial p({1, 2, 0, 0});
    CHECK_EQ(p.degree(), 1);
    CHECK_EQ(p.coeff(0), Int(1));
    CHECK_EQ(p.coeff(1), Int(2));
    CHECK_EQ(p.coeff(5), Int(0));  // beyond the stored degree
    CHECK(IntPolynomial({0, 0}).is_zero());
    CHECK_EQ(IntPolynomial::zero().degree(), -1);
}

TEST_CASE("geometric builds 1 + x + ... + x^(n-1)") {
    const IntPolynomial g = IntPolynomial::geometric(4);
    CHECK_EQ(g.degree(), 3);
    for (int k = 0; k <= 3; ++k) {
        CHECK_EQ(g.coeff(k), Int(1));
    }
    CHECK_EQ(IntPolynomial::geometric(1), IntPolynomial::one());
    CHECK_THROWS_AS(IntPolynomial::geometric(0), std::invalid_argument);
}

TEST_CASE("univariate product: (1 + x)(1 - x) = 1 - x^2") {
    const IntPolynomial lhs = IntPolynomial({1, 1}) * IntPolynomial({1, -1});
    CHECK_EQ(lhs, IntPolynomial({1, 0, -1}));
}

TEST_CASE("univariate sum and difference cancel exactly") {
    const IntPolynomial p({3, -1, 2});
    const IntPolynomial q({1, 1});
    CHECK_EQ((p + q) - q, p);
    CHECK((p - p).is_zero());
    CHECK_EQ(p.coeff_l1(), Int(6));
}

TEST_CASE("monomial places a single coefficient") {
    const IntPolynomial m = IntPolynomial::monomial(3, 5);
    CHECK_EQ(m.degree(), 3);
    CHECK_EQ(m.coeff(3), Int(5));
    CHECK_EQ(m.coeff(0), Int(0));
}

TEST_CASE("bivariate degrees ignore zero fringes") {
    BivariatePoly p;
    p.set_coeff(2, 3, 7);
    CHECK_EQ(p.x_degree(), 2);
    CHECK_EQ(p.y_degree(), 3);
    p.set_coeff(2, 3, 0);
    CHECK(p.is_zero());
    CHECK_EQ(p.x_degree(), -1);
    CHECK_EQ(p.y_degree(), -1);
}

TEST_CASE("bivariate product matches a hand expansion") {
    // (1 + x + x y)(1 + x + y) = 1 + 2x + y + x^2 + 2xy + x^2 y + x y^2.
    BivariatePoly p;
    p.set_coeff(0, 0, 1);
    p.set_coeff(1, 0, 1);
    p.set_coeff(1, 1, 1);
    BivariatePoly q;
    q.set_coeff(0, 0, 1);
    q.set_coeff(1, 0, 1);
    q.set_coeff(0, 1, 1);

    const BivariatePoly product = p * q;
    BivariatePoly expected;
    expected.set_coeff(0, 0, 1);
    expected.set_coeff(1, 0, 2);
    expected.set_coeff(0, 1, 1);
    expected.set_coeff(2, 0, 1);
    expected.set_coeff(1, 1, 2);
    expected.set_coeff(2, 1, 1);
    expected.set_coeff(1, 2, 1);
    CHECK_EQ(product, expected);
}

TEST_CASE("bivariate product agrees with numeric evaluation") {
    BivariatePoly p;
    p.set_coeff(0, 0, 2);
    p.set_coeff(3, 1, -5);
    p.set_coeff(1, 2, 4);
    BivariatePoly q;
    q.set_coeff(0, 2, 3);
    q.set_coeff(2, 0, -1);

    const BivariatePoly product = p * q;
    const std::complex<double> x{0.7, -0.3};
    const std::complex<double> y{-1.1, 0.4};
    const std::complex<double> direct = oracles::complex_eval(product, x, y);
    const std::complex<double> split =
        oracles::complex_eval(p, x, y) * oracles::complex_eval(q, x, y);
    CHECK_LT(std::abs(direct - split), 1e-10);
}

TEST_CASE("embeddings of univariate polynomials use the right variable") {
    const IntPolynomial g = IntPolynomial::geometric(3);
    const BivariatePoly in_x = BivariatePoly::in_x(g);
    CHECK_EQ(in_x.x_degree(), 2);
    CHECK_EQ(in_x.y_degree(), 0);
    const BivariatePoly in_y = BivariatePoly::in_y(g);
    CHECK_EQ(in_y.x_degree(), 0);
    CHECK_EQ(in_y.y_degree(), 2);
}

TEST_CASE("move-tally identity accepts the 3x3 clearing tallies") {
    // Placements at (1,1), (2,2), (2,1); one clear of column 2; clears of
    // rows 1 and 2.  P = 1 + xy + x, Q = x, R = 1 + y.
    BivariatePoly placements;
    placements.set_coeff(0, 0, 1);
    placements.set_coeff(1, 1, 1);
    placements.set_coeff(1, 0, 1);
    const IntPolynomial column_clears({0, 1});
    const IntPolynomial row_clears({1, 1});
    CHECK(verify_move_identity(placements, column_clears, row_clears, 3));
}

TEST_CASE("move-tally identity rejects a missing placement") {
    BivariatePoly placements;
    placements.set_coeff(0, 0, 1);
    placements.set_coeff(1, 1, 1);  // the (2,1) placement is dropped
    const IntPolynomial column_clears({0, 1});
    const IntPolynomial row_clears({1, 1});
    CHECK_FALSE(verify_move_identity(placements, column_clears, row_clears, 3));
}

TEST_CASE("move-tally identity enforces degree bounds") {
    BivariatePoly placements;
    placements.set_coeff(2, 0, 1);  // corner column 3 does not fit a 3-board
    CHECK_THROWS_AS(
        verify_move_identity(placements, IntPolynomial::zero(), IntPolynomial::zero(), 3),
        std::invalid_argument);
    CHECK_THROWS_AS(verify_move_identity(BivariatePoly::zero(), IntPolynomial::geometric(4),
                                         IntPolynomial::zero(), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_move_identity(BivariatePoly::zero(), IntPolynomial::zero(),
                                         IntPolynomial::zero(), 1),
                    std::invalid_argument);
}

TEST_CASE("move-tally identity holds vacuously for the empty tally") {
    CHECK(verify_move_identity(BivariatePoly::zero(), IntPolynomial::zero(),
                               IntPolynomial::zero(), 3));
}

TEST_SUITE_END();
