#include <olymp/algebra/roots.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace olymp::algebra {

std::complex<double> RootOfUnity::value() const {
    const double angle = 2.0 * std::numbers::pi * exponent / order;
    return {std::cos(angle), std::sin(angle)};
}

std::vector<RootOfUnity> nonunit_roots(int n) {
    if (n < 2) {
        throw std::invalid_argument("nonunit_roots: order must be at least 2");
    }
    std::vector<RootOfUnity> roots;
    roots.reserve(static_cast<std::size_t>(n) - 1);
    for (int k = 1; k < n; ++k) {
        roots.push_back({n, k});
    }
    return roots;
}

double zero_tolerance(const BivariatePoly& p) {
    return 1e-9 * (1.0 + static_cast<double>(p.coeff_l1()));
}

EisensteinInt eval_cubic_exact(const BivariatePoly& p, int k1, int k2) {
    EisensteinInt total;
    for (int i = 0; i <= p.x_degree(); ++i) {
        for (int j = 0; j <= p.y_degree(); ++j) {
            const Int& c = p.coeff(i, j);
            if (c == 0) {
                continue;
            }
            // c * w^(k1*i + k2*j); exponents stay small after reduction mod 3.
            const long e = (static_cast<long>(k1 % 3) * (i % 3) +
                            static_cast<long>(k2 % 3) * (j % 3)) % 3;
            total += EisensteinInt(c, 0) * EisensteinInt::omega_pow(e);
        }
    }
    return total;
}

RootEvaluation eval_at_roots(const BivariatePoly& p, const RootOfUnity& r1,
                             const RootOfUnity& r2) {
    if (r1.order < 1 || r2.order < 1) {
        throw std::invalid_argument("eval_at_roots: root order must be positive");
    }
    if (r1.order == 3 && r2.order == 3) {
        const EisensteinInt exact = eval_cubic_exact(p, r1.exponent, r2.exponent);
        return {exact.to_complex(), exact.is_zero(), exact};
    }

    // Numeric path: each power of a root is itself a root of the same order,
    // so compute powers by exponent arithmetic instead of repeated products.
    std::complex<double> total{0.0, 0.0};
    for (int i = 0; i <= p.x_degree(); ++i) {
        for (int j = 0; j <= p.y_degree(); ++j) {
            const Int& c = p.coeff(i, j);
            if (c == 0) {
                continue;
            }
            const RootOfUnity xi{r1.order, static_cast<int>((static_cast<long>(r1.exponent) * i) % r1.order)};
            const RootOfUnity yj{r2.order, static_cast<int>((static_cast<long>(r2.exponent) * j) % r2.order)};
            total += static_cast<double>(c) * xi.value() * yj.value();
        }
    }
    return {total, std::abs(total) < zero_tolerance(p), std::nullopt};
}

std::pair<RootOfUnity, RootOfUnity> find_nonroot(const BivariatePoly& p,
                                                 const std::vector<RootOfUnity>& candidates) {
    if (p.is_zero()) {
        throw std::invalid_argument("find_nonroot: zero polynomial has no nonroot");
    }
    if (candidates.empty()) {
        throw std::invalid_argument("find_nonroot: empty candidate list");
    }
    for (const RootOfUnity& r : candidates) {
        if (r.order != candidates.front().order) {
            throw std::invalid_argument("find_nonroot: candidates must share one order");
        }
    }
    const int side = static_cast<int>(candidates.size());
    if (p.x_degree() >= side || p.y_degree() >= side) {
        throw std::invalid_argument(
            "find_nonroot: grid side must exceed both degrees for a nonroot to be guaranteed");
    }

    for (const RootOfUnity& a1 : candidates) {
        for (const RootOfUnity& a2 : candidates) {
            if (!eval_at_roots(p, a1, a2).is_zero) {
                return {a1, a2};
            }
        }
    }
    // A nonzero polynomial with degrees below the grid side cannot vanish on
    // the whole grid; reaching this line means the evaluator is broken.
    throw std::logic_error("find_nonroot: no nonroot found on a sufficient grid");
}

}  // namespace olymp::algebra
