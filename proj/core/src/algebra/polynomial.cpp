#include <olymp/algebra/polynomial.hpp>

#include <algorithm>
#include <stdexcept>

namespace olymp::algebra {

namespace {
const Int kZero = 0;
}  // namespace

// ---- IntPolynomial ---------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<Int> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending_coeffs) {
    coeffs_.reserve(ascending_coeffs.size());
    for (const long c : ascending_coeffs) {
        coeffs_.emplace_back(c);
    }
    normalize();
}

IntPolynomial IntPolynomial::monomial(int degree, Int coeff) {
    if (degree < 0) {
        throw std::invalid_argument("IntPolynomial::monomial: negative degree");
    }
    IntPolynomial p;
    p.set_coeff(degree, std::move(coeff));
    return p;
}

IntPolynomial IntPolynomial::geometric(int n) {
    if (n <= 0) {
        throw std::invalid_argument("IntPolynomial::geometric: n must be positive");
    }
    IntPolynomial p;
    p.coeffs_.assign(static_cast<std::size_t>(n), Int(1));
    return p;
}

const Int& IntPolynomial::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) {
        return kZero;
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

void IntPolynomial::set_coeff(int k, Int value) {
    if (k < 0) {
        throw std::invalid_argument("IntPolynomial::set_coeff: negative degree");
    }
    if (static_cast<std::size_t>(k) >= coeffs_.size()) {
        if (value == 0) {
            return;
        }
        coeffs_.resize(static_cast<std::size_t>(k) + 1, Int(0));
    }
    coeffs_[static_cast<std::size_t>(k)] = std::move(value);
    normalize();
}

void IntPolynomial::add_to_coeff(int k, const Int& delta) {
    set_coeff(k, coeff(k) + delta);
}

Int IntPolynomial::coeff_l1() const {
    Int total = 0;
    for (const Int& c : coeffs_) {
        total += abs(c);
    }
    return total;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Int(0));
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Int(0));
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    normalize();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return IntPolynomial::zero();
    }
    IntPolynomial out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    out.normalize();
    return out;
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    if (p.is_zero()) {
        return os << "0";
    }
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        const Int& c = p.coeff(k);
        if (c == 0) {
            continue;
        }
        if (!first) {
            os << (c > 0 ? " + " : " - ");
        } else if (c < 0) {
            os << "-";
        }
        const Int mag = abs(c);
        if (mag != 1 || k == 0) {
            os << mag;
        }
        if (k > 0) {
            os << "x";
            if (k > 1) {
                os << "^" << k;
            }
        }
        first = false;
    }
    return os;
}

// ---- BivariatePoly ----------------------------------------------------------

BivariatePoly BivariatePoly::monomial(int i, int j, Int coeff) {
    if (i < 0 || j < 0) {
        throw std::invalid_argument("BivariatePoly::monomial: negative degree");
    }
    BivariatePoly p;
    p.set_coeff(i, j, std::move(coeff));
    return p;
}

BivariatePoly BivariatePoly::in_x(const IntPolynomial& p) {
    BivariatePoly out;
    for (int k = 0; k <= p.degree(); ++k) {
        out.set_coeff(k, 0, p.coeff(k));
    }
    return out;
}

BivariatePoly BivariatePoly::in_y(const IntPolynomial& p) {
    BivariatePoly out;
    for (int k = 0; k <= p.degree(); ++k) {
        out.set_coeff(0, k, p.coeff(k));
    }
    return out;
}

bool BivariatePoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

int BivariatePoly::x_degree() const {
    for (int i = rows_ - 1; i >= 0; --i) {
        for (int j = 0; j < cols_; ++j) {
            if (coeffs_[index(i, j)] != 0) {
                return i;
            }
        }
    }
    return -1;
}

int BivariatePoly::y_degree() const {
    for (int j = cols_ - 1; j >= 0; --j) {
        for (int i = 0; i < rows_; ++i) {
            if (coeffs_[index(i, j)] != 0) {
                return j;
            }
        }
    }
    return -1;
}

const Int& BivariatePoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_) {
        return kZero;
    }
    return coeffs_[index(i, j)];
}

void BivariatePoly::set_coeff(int i, int j, Int value) {
    if (i < 0 || j < 0) {
        throw std::invalid_argument("BivariatePoly::set_coeff: negative degree");
    }
    if (i >= rows_ || j >= cols_) {
        if (value == 0) {
            return;
        }
        ensure_size(i, j);
    }
    coeffs_[index(i, j)] = std::move(value);
}

void BivariatePoly::add_to_coeff(int i, int j, const Int& delta) {
    set_coeff(i, j, coeff(i, j) + delta);
}

Int BivariatePoly::coeff_l1() const {
    Int total = 0;
    for (const Int& c : coeffs_) {
        total += abs(c);
    }
    return total;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
    for (int i = 0; i < rhs.rows_; ++i) {
        for (int j = 0; j < rhs.cols_; ++j) {
            const Int& c = rhs.coeffs_[rhs.index(i, j)];
            if (c != 0) {
                add_to_coeff(i, j, c);
            }
        }
    }
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) {
    for (int i = 0; i < rhs.rows_; ++i) {
        for (int j = 0; j < rhs.cols_; ++j) {
            const Int& c = rhs.coeffs_[rhs.index(i, j)];
            if (c != 0) {
                add_to_coeff(i, j, -c);
            }
        }
    }
    return *this;
}

BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs) {
    BivariatePoly out;
    if (lhs.is_zero() || rhs.is_zero()) {
        return out;
    }
    out.ensure_size(lhs.x_degree() + rhs.x_degree(), lhs.y_degree() + rhs.y_degree());
    for (int i1 = 0; i1 < lhs.rows_; ++i1) {
        for (int j1 = 0; j1 < lhs.cols_; ++j1) {
            const Int& c1 = lhs.coeffs_[lhs.index(i1, j1)];
            if (c1 == 0) {
                continue;
            }
            for (int i2 = 0; i2 < rhs.rows_; ++i2) {
                for (int j2 = 0; j2 < rhs.cols_; ++j2) {
                    const Int& c2 = rhs.coeffs_[rhs.index(i2, j2)];
                    if (c2 == 0) {
                        continue;
                    }
                    out.coeffs_[out.index(i1 + i2, j1 + j2)] += c1 * c2;
                }
            }
        }
    }
    return out;
}

bool operator==(const BivariatePoly& lhs, const BivariatePoly& rhs) {
    return (lhs - rhs).is_zero();
}

void BivariatePoly::ensure_size(int i, int j) {
    const int new_rows = std::max(rows_, i + 1);
    const int new_cols = std::max(cols_, j + 1);
    if (new_rows == rows_ && new_cols == cols_) {
        return;
    }
    std::vector<Int> grown(static_cast<std::size_t>(new_rows) * new_cols, Int(0));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            grown[static_cast<std::size_t>(r) * new_cols + c] = std::move(coeffs_[index(r, c)]);
        }
    }
    rows_ = new_rows;
    cols_ = new_cols;
    coeffs_ = std::move(grown);
}

std::ostream& operator<<(std::ostream& os, const BivariatePoly& p) {
    if (p.is_zero()) {
        return os << "0";
    }
    bool first = true;
    for (int i = 0; i <= p.x_degree(); ++i) {
        for (int j = 0; j <= p.y_degree(); ++j) {
            const Int& c = p.coeff(i, j);
            if (c == 0) {
                continue;
            }
            if (!first) {
                os << (c > 0 ? " + " : " - ");
            } else if (c < 0) {
                os << "-";
            }
            const Int mag = abs(c);
            if (mag != 1 || (i == 0 && j == 0)) {
                os << mag;
            }
            if (i > 0) {
                os << "x";
                if (i > 1) {
                    os << "^" << i;
                }
            }
            if (j > 0) {
                os << "y";
                if (j > 1) {
                    os << "^" << j;
                }
            }
            first = false;
        }
    }
    return os;
}

// ---- move-tally identity ----------------------------------------------------

bool verify_move_identity(const BivariatePoly& placements,
                          const IntPolynomial& column_clears,
                          const IntPolynomial& row_clears,
                          int n) {
    if (n < 2) {
        throw std::invalid_argument("verify_move_identity: board size must be at least 2");
    }
    if (placements.x_degree() > n - 2 || placements.y_degree() > n - 2) {
        throw std::invalid_argument(
            "verify_move_identity: placement polynomial exceeds the (n-2, n-2) degree bound");
    }
    if (column_clears.degree() > n - 1 || row_clears.degree() > n - 1) {
        throw std::invalid_argument(
            "verify_move_identity: clear polynomial exceeds the n-1 degree bound");
    }

    BivariatePoly corner;  // 1 + x + y
    corner.set_coeff(0, 0, 1);
    corner.set_coeff(1, 0, 1);
    corner.set_coeff(0, 1, 1);

    BivariatePoly lhs = placements * corner;
    lhs -= BivariatePoly::in_x(column_clears) * BivariatePoly::in_y(IntPolynomial::geometric(n));
    lhs -= BivariatePoly::in_y(row_clears) * BivariatePoly::in_x(IntPolynomial::geometric(n));
    return lhs.is_zero();
}

}  // namespace olymp::algebra
