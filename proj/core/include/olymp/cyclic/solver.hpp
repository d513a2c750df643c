#pragma once

#include <olymp/cyclic/system.hpp>

namespace olymp::cyclic {

struct SolveResult {
    Assignment solution;
    bool converged = false;
    int iterations = 0;         // Newton steps taken
    double residual = 0.0;      // final sup-norm residual
    int step_halvings = 0;      // total damping halvings across all steps
    int singular_retries = 0;   // times the linear solve degenerated and the
                                // iterate was deterministically nudged
};

/**
 * Damped Newton iteration on the full cyclic system.
 *
 * - `initial` must have pair count n and strictly positive entries.
 * - Each step solves the analytic-Jacobian linear system and backtracks the
 *   step length (factor 1/2, at most 40 halvings) until the iterate stays
 *   strictly positive and the sup-norm residual strictly decreases.
 * - A degenerate linear solve triggers a deterministic relative perturbation
 *   of the iterate and a retry (at most 3 times).
 * - An initial residual already below `tol` returns immediately with zero
 *   iterations, so the exact solution is a fixed point of the driver.
 */
SolveResult solve(int n, const Assignment& initial, double tol = 1e-12, int max_iters = 200);

}  // namespace olymp::cyclic
