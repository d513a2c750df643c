#pragma once

// Independent re-implementations used to cross-check library results.  Each
// helper deliberately computes its answer by a different route than the code
// under test (numeric instead of exact, brute force instead of incremental),
// so agreement between the two is evidence and not tautology.

#include <olymp/algebra/polynomial.hpp>
#include <olymp/cyclic/system.hpp>
#include <olymp/gcdsets/gcd_sets.hpp>

#include <complex>
#include <map>
#include <numeric>
#include <vector>

namespace oracles {

/// Numeric evaluation of a bivariate integer polynomial at complex points.
inline std::complex<double> complex_eval(const olymp::algebra::BivariatePoly& p,
                                         std::complex<double> x, std::complex<double> y) {
    std::complex<double> total{0.0, 0.0};
    if (p.is_zero()) {
        return total;
    }
    std::complex<double> xi{1.0, 0.0};
    for (int i = 0; i <= p.x_degree(); ++i) {
        std::complex<double> yj{1.0, 0.0};
        for (int j = 0; j <= p.y_degree(); ++j) {
            total += static_cast<double>(p.coeff(i, j)) * xi * yj;
            yj *= y;
        }
        xi *= x;
    }
    return total;
}

/// Central-difference Jacobian of the full cyclic residual map.
inline std::vector<std::vector<double>> fd_jacobian(const olymp::cyclic::Assignment& x,
                                                    double h) {
    const int size = x.size();
    std::vector<std::vector<double>> jac(size, std::vector<double>(size, 0.0));
    for (int col = 0; col < size; ++col) {
        olymp::cyclic::Assignment lo = x;
        olymp::cyclic::Assignment hi = x;
        lo.set(col + 1, x.at(col + 1) - h);
        hi.set(col + 1, x.at(col + 1) + h);
        const std::vector<double> f_lo = olymp::cyclic::residual(lo);
        const std::vector<double> f_hi = olymp::cyclic::residual(hi);
        for (int row = 0; row < size; ++row) {
            jac[row][col] = (f_hi[row] - f_lo[row]) / (2.0 * h);
        }
    }
    return jac;
}

/// Brute-force version of the gcd bijection property: for every member s,
/// the multiset {gcd(s, x) : x in set} must equal the divisor list of s.
inline bool gcd_property_bruteforce(const olymp::gcdsets::GcdSet& set) {
    for (const auto s : set.elements) {
        std::map<olymp::gcdsets::Element, int> hits;
        for (const auto x : set.elements) {
            hits[std::gcd(s, x)] += 1;
        }
        const auto divisors = olymp::gcdsets::divisors_of(s);
        if (static_cast<int>(hits.size()) != static_cast<int>(divisors.size())) {
            return false;
        }
        for (const auto d : divisors) {
            auto it = hits.find(d);
            if (it == hits.end() || it->second != 1) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace oracles
