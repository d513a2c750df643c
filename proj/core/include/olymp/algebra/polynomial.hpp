#pragma once

#include <olymp/algebra/eisenstein.hpp>

#include <initializer_list>
#include <ostream>
#include <vector>

namespace olymp::algebra {

/**
 * Dense univariate polynomial with arbitrary-precision integer coefficients.
 *
 * Coefficients are stored ascending by degree and kept normalized (no
 * trailing zeros), so the zero polynomial has an empty coefficient vector and
 * degree() == -1.  Arithmetic is exact; there is no coefficient overflow.
 */
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> ascending_coeffs);
    IntPolynomial(std::initializer_list<long> ascending_coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return IntPolynomial({1}); }
    /** coeff * x^degree */
    static IntPolynomial monomial(int degree, Int coeff);
    /** 1 + x + ... + x^(n-1); n must be positive. */
    static IntPolynomial geometric(int n);

    /** Degree of the leading term, or -1 for the zero polynomial. */
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /** Coefficient of x^k; zero beyond the stored degree. */
    const Int& coeff(int k) const;
    void set_coeff(int k, Int value);
    void add_to_coeff(int k, const Int& delta);

    /** Sum of absolute coefficient values (the l1 mass). */
    Int coeff_l1() const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);

    friend bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }
    friend bool operator!=(const IntPolynomial& lhs, const IntPolynomial& rhs) { return !(lhs == rhs); }

    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

private:
    void normalize();

    std::vector<Int> coeffs_;  // coeffs_[k] multiplies x^k
};

/**
 * Dense bivariate polynomial over the integers.
 *
 * coeff(i, j) multiplies x^i y^j.  Storage is a row-major rectangle that
 * grows on demand; the normalized view (x_degree/y_degree) ignores zero
 * fringes, and is_zero() is an exact integer test.
 */
class BivariatePoly {
public:
    BivariatePoly() = default;

    static BivariatePoly zero() { return BivariatePoly(); }
    /** coeff * x^i y^j */
    static BivariatePoly monomial(int i, int j, Int coeff);
    /** Embed a univariate polynomial as a polynomial in x alone. */
    static BivariatePoly in_x(const IntPolynomial& p);
    /** Embed a univariate polynomial as a polynomial in y alone. */
    static BivariatePoly in_y(const IntPolynomial& p);

    bool is_zero() const;
    /** Largest i with some coeff(i, j) != 0, or -1 when zero. */
    int x_degree() const;
    /** Largest j with some coeff(i, j) != 0, or -1 when zero. */
    int y_degree() const;

    const Int& coeff(int i, int j) const;
    void set_coeff(int i, int j, Int value);
    void add_to_coeff(int i, int j, const Int& delta);

    /** Sum of absolute coefficient values. */
    Int coeff_l1() const;

    BivariatePoly& operator+=(const BivariatePoly& rhs);
    BivariatePoly& operator-=(const BivariatePoly& rhs);
    friend BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs += rhs; }
    friend BivariatePoly operator-(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs -= rhs; }
    friend BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs);

    friend bool operator==(const BivariatePoly& lhs, const BivariatePoly& rhs);
    friend bool operator!=(const BivariatePoly& lhs, const BivariatePoly& rhs) { return !(lhs == rhs); }

    friend std::ostream& operator<<(std::ostream& os, const BivariatePoly& p);

private:
    void ensure_size(int i, int j);
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_ = 0;  // allocated x-degree bound + 1
    int cols_ = 0;  // allocated y-degree bound + 1
    std::vector<Int> coeffs_;
};

/**
 * Exact check of the move-tally identity for an n x n board:
 *
 *   P(x,y) * (1 + x + y)
 *     - Q(x) * (1 + y + ... + y^(n-1))
 *     - R(y) * (1 + x + ... + x^(n-1))  == 0
 *
 * P collects placement counts (coeff of x^(i-1) y^(j-1) is the number of
 * pieces dropped with lower-left cell (i, j)), Q column-clear counts, and R
 * row-clear counts.  Throws std::invalid_argument when a degree bound is
 * violated (P must fit in (n-2, n-2), Q and R in degree n-1) or n < 2.
 */
bool verify_move_identity(const BivariatePoly& placements,
                          const IntPolynomial& column_clears,
                          const IntPolynomial& row_clears,
                          int n);

}  // namespace olymp::algebra
