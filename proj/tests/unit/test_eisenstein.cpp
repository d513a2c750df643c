#include <doctest.h>

#include <olymp/algebra/eisenstein.hpp>

#include <complex>

using olymp::algebra::EisensteinInt;
using olymp::algebra::Int;

namespace {

const double kTau = 6.283185307179586476925286766559;

std::complex<double> primitive_cube_root() {
    return std::polar(1.0, kTau / 3.0);
}

}  // namespace

TEST_SUITE_BEGIN("algebra");

TEST_CASE("omega squared reduces to -1 - omega") {
    const EisensteinInt w = EisensteinInt::omega();
    CHECK_EQ(w * w, EisensteinInt(-1, -1));
    CHECK_EQ(EisensteinInt::omega_pow(2), EisensteinInt(-1, -1));
}

TEST_CASE("1 + omega + omega^2 vanishes exactly") {
    const EisensteinInt w = EisensteinInt::omega();
    const EisensteinInt sum = EisensteinInt(1) + w + w * w;
    CHECK(sum.is_zero());
}

TEST_CASE("omega powers cycle with period three, negatives included") {
    for (long k = -9; k <= 9; ++k) {
        CHECK_EQ(EisensteinInt::omega_pow(k), EisensteinInt::omega_pow(k + 3));
    }
    CHECK_EQ(EisensteinInt::omega_pow(0), EisensteinInt(1, 0));
    CHECK_EQ(EisensteinInt::omega_pow(1), EisensteinInt(0, 1));
    CHECK_EQ(EisensteinInt::omega_pow(-1), EisensteinInt::omega_pow(2));
    // omega * omega^2 = omega^3 = 1.
    CHECK_EQ(EisensteinInt::omega_pow(1) * EisensteinInt::omega_pow(2), EisensteinInt(1, 0));
}

TEST_CASE("norm matches |a + b omega|^2 and is multiplicative") {
    CHECK_EQ(EisensteinInt(2, 1).norm(), Int(3));
    CHECK_EQ(EisensteinInt(0, 0).norm(), Int(0));
    CHECK_EQ(EisensteinInt(0, 1).norm(), Int(1));

    for (long a = -3; a <= 3; ++a) {
        for (long b = -3; b <= 3; ++b) {
            for (long c = -2; c <= 2; ++c) {
                for (long d = -2; d <= 2; ++d) {
                    const EisensteinInt x(a, b);
                    const EisensteinInt y(c, d);
                    CHECK_EQ((x * y).norm(), x.norm() * y.norm());
                }
            }
        }
    }
}

TEST_CASE("norm is zero exactly on the zero element") {
    for (long a = -4; a <= 4; ++a) {
        for (long b = -4; b <= 4; ++b) {
            const bool zero_norm = EisensteinInt(a, b).norm() == 0;
            CHECK_EQ(zero_norm, (a == 0 && b == 0));
        }
    }
}

TEST_CASE("ring arithmetic agrees with complex arithmetic") {
    const std::complex<double> w = primitive_cube_root();
    auto embed = [&](const EisensteinInt& z) {
        return static_cast<double>(z.a()) + static_cast<double>(z.b()) * w;
    };
    for (long a = -2; a <= 2; ++a) {
        for (long b = -2; b <= 2; ++b) {
            const EisensteinInt x(a, b);
            const EisensteinInt y(b - 1, a + 2);
            CHECK_LT(std::abs(embed(x * y) - embed(x) * embed(y)), 1e-12);
            CHECK_LT(std::abs(embed(x + y) - (embed(x) + embed(y))), 1e-12);
            CHECK_LT(std::abs(embed(x - y) - (embed(x) - embed(y))), 1e-12);
            CHECK_LT(std::abs(x.to_complex() - embed(x)), 1e-12);
        }
    }
}

TEST_CASE("to_complex places omega on the unit circle") {
    const std::complex<double> w = EisensteinInt::omega().to_complex();
    CHECK(std::abs(w) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w.real() == doctest::Approx(-0.5).epsilon(1e-14));
    // omega^3 back to 1.
    const std::complex<double> w3 = w * w * w;
    CHECK_LT(std::abs(w3 - std::complex<double>(1.0, 0.0)), 1e-12);
}

TEST_SUITE_END();
