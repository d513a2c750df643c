#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <ostream>
#include <utility>

namespace olymp::algebra {

/** Arbitrary-precision integer used for all exact coefficient arithmetic. */
using Int = boost::multiprecision::cpp_int;

/**
 * Element a + b*w of the ring Z[w], where w = exp(2*pi*i/3).
 *
 * Multiplication reduces by w^2 = -1 - w, so every product stays on the
 * integer basis (1, w).  The ring is exact: equality against zero is a pure
 * integer comparison, never a floating-point tolerance.
 */
class EisensteinInt {
public:
    EisensteinInt() : a_(0), b_(0) {}
    EisensteinInt(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {}
    EisensteinInt(long value) : a_(value), b_(0) {}  // NOLINT: implicit from integers

    static EisensteinInt omega() { return EisensteinInt(0, 1); }

    /** w^k for any integer k (reduced modulo 3). */
    static EisensteinInt omega_pow(long k) {
        switch (((k % 3) + 3) % 3) {
            case 0: return EisensteinInt(1, 0);
            case 1: return EisensteinInt(0, 1);
            default: return EisensteinInt(-1, -1);  // w^2 = -1 - w
        }
    }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /** Field norm a^2 - a*b + b^2; zero exactly on the zero element. */
    Int norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    EisensteinInt operator-() const { return EisensteinInt(-a_, -b_); }

    EisensteinInt& operator+=(const EisensteinInt& rhs) {
        a_ += rhs.a_;
        b_ += rhs.b_;
        return *this;
    }

    EisensteinInt& operator-=(const EisensteinInt& rhs) {
        a_ -= rhs.a_;
        b_ -= rhs.b_;
        return *this;
    }

    EisensteinInt& operator*=(const EisensteinInt& rhs) {
        // (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2 = (ac - bd) + (ad + bc - bd) w
        const Int ac = a_ * rhs.a_;
        const Int bd = b_ * rhs.b_;
        const Int cross = a_ * rhs.b_ + b_ * rhs.a_;
        a_ = ac - bd;
        b_ = cross - bd;
        return *this;
    }

    friend EisensteinInt operator+(EisensteinInt lhs, const EisensteinInt& rhs) { return lhs += rhs; }
    friend EisensteinInt operator-(EisensteinInt lhs, const EisensteinInt& rhs) { return lhs -= rhs; }
    friend EisensteinInt operator*(EisensteinInt lhs, const EisensteinInt& rhs) { return lhs *= rhs; }

    friend bool operator==(const EisensteinInt& lhs, const EisensteinInt& rhs) {
        return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
    }
    friend bool operator!=(const EisensteinInt& lhs, const EisensteinInt& rhs) { return !(lhs == rhs); }

    /** Numeric image under w -> -1/2 + sqrt(3)/2 i; for reporting only. */
    std::complex<double> to_complex() const {
        const double a = static_cast<double>(a_);
        const double b = static_cast<double>(b_);
        return {a - 0.5 * b, 0.8660254037844386467637231707529362 * b};
    }

    friend std::ostream& operator<<(std::ostream& os, const EisensteinInt& z) {
        return os << "(" << z.a_ << " + " << z.b_ << "w)";
    }

private:
    Int a_;
    Int b_;
};

}  // namespace olymp::algebra
