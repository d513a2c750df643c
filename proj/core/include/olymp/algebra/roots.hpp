#pragma once

#include <olymp/algebra/eisenstein.hpp>
#include <olymp/algebra/polynomial.hpp>

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace olymp::algebra {

/** The root of unity e^(2*pi*i*exponent/order), with 0 <= exponent < order. */
struct RootOfUnity {
    int order;
    int exponent;

    std::complex<double> value() const;

    friend bool operator==(const RootOfUnity& lhs, const RootOfUnity& rhs) {
        return lhs.order == rhs.order && lhs.exponent == rhs.exponent;
    }
};

/** The order-n roots of unity other than 1, ascending by exponent; n >= 2. */
std::vector<RootOfUnity> nonunit_roots(int n);

/**
 * Verdict of evaluating a bivariate polynomial at a pair of roots of unity.
 *
 * When both roots have order 3 the evaluation runs in Z[w] and `exact_value`
 * is set; `is_zero` is then an exact integer statement.  Otherwise the
 * evaluation is numeric and `is_zero` compares |value| against a tolerance
 * scaled by the coefficient mass (see zero_tolerance).
 */
struct RootEvaluation {
    std::complex<double> value;
    bool is_zero;
    std::optional<EisensteinInt> exact_value;

    bool exact() const { return exact_value.has_value(); }
};

/** |value| threshold below which a numeric evaluation counts as zero. */
double zero_tolerance(const BivariatePoly& p);

/** Exact evaluation of p at (w^k1, w^k2), w the primitive cube root of unity. */
EisensteinInt eval_cubic_exact(const BivariatePoly& p, int k1, int k2);

/** Evaluate p at (r1, r2); exact when both roots have order 3. */
RootEvaluation eval_at_roots(const BivariatePoly& p, const RootOfUnity& r1, const RootOfUnity& r2);

/**
 * First grid point of candidates x candidates (outer loop first coordinate,
 * both in the given order) where p does not vanish.
 *
 * A nonzero polynomial whose degrees are both below the grid side length must
 * have such a point, so a fruitless scan throws std::logic_error.  Throws
 * std::invalid_argument for the zero polynomial, for an empty or mixed-order
 * candidate list, and when the grid is too small for the degree bound to
 * apply.
 */
std::pair<RootOfUnity, RootOfUnity> find_nonroot(const BivariatePoly& p,
                                                 const std::vector<RootOfUnity>& candidates);

}  // namespace olymp::algebra
