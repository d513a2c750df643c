#pragma once

#include <vector>

namespace olymp::cyclic {

/**
 * A cyclic assignment a_1, ..., a_{2n} (n >= 4) indexed 1-based with wraparound.
 *
 * The system it is measured against couples odd and even positions:
 *   odd equations   a_{2i-1} = 1/a_{2i-2} + 1/a_{2i}
 *   even equations  a_{2i}   = a_{2i-1}  + a_{2i+1}
 * (indices cyclic).  The assignment with 1 at every odd position and 2 at
 * every even position satisfies both families exactly.
 */
class Assignment {
public:
    explicit Assignment(int n);              // 2n slots, all set to 1.0
    Assignment(int n, std::vector<double> values);  // values.size() must be 2n

    int pair_count() const { return n_; }    // n
    int size() const { return 2 * n_; }      // 2n

    /// 1-based cyclic access: at(0) == at(2n), at(2n + 1) == at(1).
    double at(int i) const { return values_[wrap(i)]; }
    void set(int i, double value) { values_[wrap(i)] = value; }

    double odd(int i) const { return at(2 * i - 1); }   // a_{2i-1}, i cyclic mod n
    double even(int i) const { return at(2 * i); }      // a_{2i},   i cyclic mod n

    const std::vector<double>& values() const { return values_; }
    bool all_positive() const;

private:
    std::size_t wrap(int i) const;

    int n_;
    std::vector<double> values_;
};

/// The exact solution: odd positions 1, even positions 2.
Assignment canonical(int n);

/**
 * Residual vector, one entry per position: entry k (0-based) is the defect
 * of the equation centered on a_{k+1}, i.e.
 *   position 2i-1:  a_{2i-1} - 1/a_{2i-2} - 1/a_{2i}
 *   position 2i:    a_{2i}   - a_{2i-1}  - a_{2i+1}
 */
std::vector<double> residual(const Assignment& x);
double residual_sup_norm(const Assignment& x);

/**
 * Residuals of the reduced system in the even-position values e_i = a_{2i}
 * alone, obtained by substituting the odd equations into the even ones:
 *   entry i-1 (0-based):  e_i - 1/e_{i-1} - 2/e_i - 1/e_{i+1}
 * The substitution is exact, so a full assignment whose odd positions
 * satisfy their equations has identical even residuals in both forms.
 */
std::vector<double> reduced_residual(const Assignment& x);
double reduced_residual_sup_norm(const Assignment& x);

/**
 * Dense Jacobian of the residual map, row k = gradient of residual entry k
 * with respect to (a_1, ..., a_{2n}).  Row layout matches residual():
 *   odd-center rows:  1 on the diagonal, +1/a^2 on both even neighbours
 *   even-center rows: 1 on the diagonal, -1 on both odd neighbours
 */
std::vector<std::vector<double>> jacobian(const Assignment& x);

/// Consequences any near-solution must exhibit.
struct IdentityReport {
    double residual_sup = 0.0;
    bool precondition_ok = false;  // residual_sup < tol

    // Balance of the even positions against their reciprocals:
    //   sum of a_{2i}  ==  sum of 4/a_{2i}
    double even_balance_gap = 0.0;

    // The odd positions s_i = a_{2i-1} reconstructed from the evens as
    // 1/e_{i-1} + 1/e_i must satisfy: sum of s_i^2 == n.
    double square_sum_gap = 0.0;

    // Aggregated harmonic-arithmetic mean comparison:
    //   sum_i 1/(1/e_{i-1} + 1/e_i)  <=  sum_i e_i / 2       (slack >= 0)
    double hm_am_slack = 0.0;
    bool hm_am_holds = false;

    // Aggregated quadratic-arithmetic mean comparison on the s_i:
    //   (sum s)^2 / n  <=  sum s^2                           (slack >= 0)
    double qm_am_slack = 0.0;
    bool qm_am_holds = false;

    bool all_pass(double gap_tol) const {
        return precondition_ok && even_balance_gap < gap_tol && square_sum_gap < gap_tol &&
               hm_am_holds && qm_am_holds;
    }
};

/**
 * Evaluates the identities above on an assignment whose full residual is
 * below `tol` (precondition_ok records whether that held).  The mean
 * inequalities are exact mathematics, so they are tested with a slack floor
 * of -16 * n * machine epsilon to absorb accumulation error only.
 */
IdentityReport check_identities(const Assignment& x, double tol);

/// Pinching certificate: the extreme even values of a near-solution trap
/// each other, forcing every even value to the same number.
struct MinMaxReport {
    double reduced_sup = 0.0;
    bool precondition_ok = false;  // reduced_sup < tol

    double min_even = 0.0;  // m
    double max_even = 0.0;  // M

    bool lower_bound_ok = false;  // m >= 2/m + 2/M - tol
    bool upper_bound_ok = false;  // 2/m + 2/M >= M - tol
    bool pinched = false;         // M - m < tol

    bool all_pass() const {
        return precondition_ok && lower_bound_ok && upper_bound_ok && pinched;
    }
};

/// Requires positive even values; `tol` is both the residual precondition
/// and the slack in the comparisons.
MinMaxReport minmax_check(const Assignment& x, double tol);

}  // namespace olymp::cyclic
