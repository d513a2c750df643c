#include <olymp/cyclic/solver.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace olymp::cyclic {
namespace {

Eigen::VectorXd residual_vector(const Assignment& x) {
    const auto res = residual(x);
    Eigen::VectorXd f(static_cast<Eigen::Index>(res.size()));
    for (std::size_t k = 0; k < res.size(); ++k) f[static_cast<Eigen::Index>(k)] = res[k];
    return f;
}

Eigen::MatrixXd jacobian_matrix(const Assignment& x) {
    const auto rows = jacobian(x);
    const auto m = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd jac(m, m);
    for (Eigen::Index r = 0; r < m; ++r) {
        for (Eigen::Index c = 0; c < m; ++c) {
            jac(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
    }
    return jac;
}

bool finite(const Eigen::VectorXd& v) {
    return v.allFinite();
}

}  // namespace

SolveResult solve(int n, const Assignment& initial, double tol, int max_iters) {
    if (initial.pair_count() != n) {
        throw std::invalid_argument("solve: initial assignment has wrong pair count");
    }
    if (!initial.all_positive()) {
        throw std::invalid_argument("solve: initial assignment must be strictly positive");
    }
    if (tol <= 0.0) throw std::invalid_argument("solve: tol must be positive");
    if (max_iters < 0) throw std::invalid_argument("solve: max_iters must be nonnegative");

    constexpr int kMaxHalvings = 40;
    constexpr int kMaxSingularRetries = 3;
    const int m = 2 * n;

    SolveResult result{initial, false, 0, residual_sup_norm(initial), 0, 0};
    if (result.residual < tol) {
        result.converged = true;
        return result;
    }

    Assignment x = initial;
    for (int iter = 0; iter < max_iters; ++iter) {
        const Eigen::VectorXd f = residual_vector(x);
        const Eigen::MatrixXd jac = jacobian_matrix(x);

        Eigen::VectorXd delta = Eigen::PartialPivLU<Eigen::MatrixXd>(jac).solve(-f);
        const bool degenerate =
            !finite(delta) || (jac * delta + f).lpNorm<Eigen::Infinity>() >
                                  1e-6 * (1.0 + f.lpNorm<Eigen::Infinity>());
        if (degenerate) {
            if (result.singular_retries >= kMaxSingularRetries) break;
            ++result.singular_retries;
            // Deterministic relative nudge, preserving positivity.
            for (int k = 1; k <= m; ++k) {
                x.set(k, x.at(k) * (1.0 + 1e-6 * (1.0 + static_cast<double>(k % 7))));
            }
            result.residual = residual_sup_norm(x);
            continue;
        }

        const double current = residual_sup_norm(x);
        double lambda = 1.0;
        bool accepted = false;
        for (int halving = 0; halving <= kMaxHalvings; ++halving) {
            Assignment trial = x;
            bool positive = true;
            for (int k = 1; k <= m; ++k) {
                const double v = x.at(k) + lambda * delta[static_cast<Eigen::Index>(k - 1)];
                if (!(v > 0.0) || !std::isfinite(v)) {
                    positive = false;
                    break;
                }
                trial.set(k, v);
            }
            if (positive) {
                const double trial_res = residual_sup_norm(trial);
                if (std::isfinite(trial_res) && trial_res < current) {
                    x = trial;
                    result.residual = trial_res;
                    accepted = true;
                    break;
                }
            }
            if (halving < kMaxHalvings) {
                lambda *= 0.5;
                ++result.step_halvings;
            }
        }
        ++result.iterations;
        if (!accepted) break;  // stalled: no positive descent step

        if (result.residual < tol) {
            result.converged = true;
            break;
        }
    }

    result.solution = x;
    return result;
}

}  // namespace olymp::cyclic
