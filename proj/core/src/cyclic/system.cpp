#include <olymp/cyclic/system.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace olymp::cyclic {

Assignment::Assignment(int n) : n_(n) {
    if (n < 4) throw std::invalid_argument("Assignment: n must be at least 4");
    values_.assign(static_cast<std::size_t>(2 * n), 1.0);
}

Assignment::Assignment(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    if (n < 4) throw std::invalid_argument("Assignment: n must be at least 4");
    if (values_.size() != static_cast<std::size_t>(2 * n)) {
        throw std::invalid_argument("Assignment: expected " + std::to_string(2 * n) +
                                    " values, got " + std::to_string(values_.size()));
    }
}

std::size_t Assignment::wrap(int i) const {
    const int m = 2 * n_;
    int k = (i - 1) % m;
    if (k < 0) k += m;
    return static_cast<std::size_t>(k);
}

bool Assignment::all_positive() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v > 0.0; });
}

Assignment canonical(int n) {
    Assignment x(n);
    for (int i = 1; i <= n; ++i) {
        x.set(2 * i - 1, 1.0);
        x.set(2 * i, 2.0);
    }
    return x;
}

std::vector<double> residual(const Assignment& x) {
    const int n = x.pair_count();
    std::vector<double> res(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        res[static_cast<std::size_t>(2 * i - 2)] =
            x.at(2 * i - 1) - 1.0 / x.at(2 * i - 2) - 1.0 / x.at(2 * i);
        res[static_cast<std::size_t>(2 * i - 1)] =
            x.at(2 * i) - x.at(2 * i - 1) - x.at(2 * i + 1);
    }
    return res;
}

double residual_sup_norm(const Assignment& x) {
    double sup = 0.0;
    for (double r : residual(x)) sup = std::max(sup, std::abs(r));
    return sup;
}

std::vector<double> reduced_residual(const Assignment& x) {
    const int n = x.pair_count();
    std::vector<double> res(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        res[static_cast<std::size_t>(i - 1)] =
            x.even(i) - 1.0 / x.even(i - 1) - 2.0 / x.even(i) - 1.0 / x.even(i + 1);
    }
    return res;
}

double reduced_residual_sup_norm(const Assignment& x) {
    double sup = 0.0;
    for (double r : reduced_residual(x)) sup = std::max(sup, std::abs(r));
    return sup;
}

std::vector<std::vector<double>> jacobian(const Assignment& x) {
    const int n = x.pair_count();
    const std::size_t m = static_cast<std::size_t>(2 * n);
    std::vector<std::vector<double>> jac(m, std::vector<double>(m, 0.0));

    // Column index of a_k (1-based cyclic).
    auto col = [&](int k) {
        int c = (k - 1) % (2 * n);
        if (c < 0) c += 2 * n;
        return static_cast<std::size_t>(c);
    };

    for (int i = 1; i <= n; ++i) {
        // Row for the equation centered on a_{2i-1}:
        //   r = a_{2i-1} - 1/a_{2i-2} - 1/a_{2i}
        auto& odd_row = jac[static_cast<std::size_t>(2 * i - 2)];
        odd_row[col(2 * i - 1)] += 1.0;
        const double prev = x.at(2 * i - 2);
        const double next = x.at(2 * i);
        odd_row[col(2 * i - 2)] += 1.0 / (prev * prev);
        odd_row[col(2 * i)] += 1.0 / (next * next);

        // Row for the equation centered on a_{2i}:
        //   r = a_{2i} - a_{2i-1} - a_{2i+1}
        auto& even_row = jac[static_cast<std::size_t>(2 * i - 1)];
        even_row[col(2 * i)] += 1.0;
        even_row[col(2 * i - 1)] += -1.0;
        even_row[col(2 * i + 1)] += -1.0;
    }
    return jac;
}

IdentityReport check_identities(const Assignment& x, double tol) {
    if (!x.all_positive()) {
        throw std::invalid_argument("check_identities: assignment must be positive");
    }
    const int n = x.pair_count();
    IdentityReport report;
    report.residual_sup = residual_sup_norm(x);
    report.precondition_ok = report.residual_sup < tol;

    double even_sum = 0.0;
    double reciprocal_sum = 0.0;
    double square_sum = 0.0;
    double s_sum = 0.0;
    double hm_sum = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double e = x.even(i);
        even_sum += e;
        reciprocal_sum += 4.0 / e;

        const double s = 1.0 / x.even(i - 1) + 1.0 / x.even(i);
        square_sum += s * s;
        s_sum += s;
        hm_sum += 1.0 / s;
    }
    report.even_balance_gap = std::abs(even_sum - reciprocal_sum);
    report.square_sum_gap = std::abs(square_sum - static_cast<double>(n));

    // Exact inequalities; the floor only absorbs summation round-off.
    const double slack_floor = -16.0 * n * std::numeric_limits<double>::epsilon();
    report.hm_am_slack = even_sum / 2.0 - hm_sum;
    report.hm_am_holds = report.hm_am_slack >= slack_floor;
    report.qm_am_slack = square_sum - s_sum * s_sum / static_cast<double>(n);
    report.qm_am_holds = report.qm_am_slack >= slack_floor;
    return report;
}

MinMaxReport minmax_check(const Assignment& x, double tol) {
    const int n = x.pair_count();
    MinMaxReport report;
    for (int i = 1; i <= n; ++i) {
        if (x.even(i) <= 0.0) {
            throw std::invalid_argument("minmax_check: even positions must be positive");
        }
    }
    report.reduced_sup = reduced_residual_sup_norm(x);
    report.precondition_ok = report.reduced_sup < tol;

    double m = x.even(1);
    double M = x.even(1);
    for (int i = 2; i <= n; ++i) {
        m = std::min(m, x.even(i));
        M = std::max(M, x.even(i));
    }
    report.min_even = m;
    report.max_even = M;
    report.lower_bound_ok = m >= 2.0 / m + 2.0 / M - tol;
    report.upper_bound_ok = 2.0 / m + 2.0 / M >= M - tol;
    report.pinched = M - m < tol;
    return report;
}

}  // namespace olymp::cyclic
