#pragma once

#include <olymp/algebra/eisenstein.hpp>
#include <olymp/algebra/polynomial.hpp>
#include <olymp/algebra/roots.hpp>
#include <olymp/tromino/board.hpp>

#include <complex>
#include <optional>
#include <vector>

namespace olymp::tromino {

/** Move counts of a sequence, by kind and position. */
struct MoveTally {
    int n = 0;
    // placements[i-1][j-1] counts pieces with corner (i, j); (n-1) x (n-1).
    std::vector<std::vector<long>> placements;
    std::vector<long> column_clears;  // column_clears[i-1] counts clears of column i
    std::vector<long> row_clears;     // row_clears[j-1] counts clears of row j

    long placement_total() const;
    long clear_total() const;
};

/** Count the moves of a sequence; coordinates are range-checked, legality is not replayed. */
MoveTally tally_moves(const std::vector<Move>& moves, int n);

/** Placement counts as the polynomial with coeff(i-1, j-1) = placements at (i, j). */
algebra::BivariatePoly placement_poly(const MoveTally& tally);
/** Column-clear counts as the polynomial with coeff(i-1) = clears of column i. */
algebra::IntPolynomial column_poly(const MoveTally& tally);
/** Row-clear counts as the polynomial with coeff(j-1) = clears of row j. */
algebra::IntPolynomial row_poly(const MoveTally& tally);

/**
 * Cell weighting Sum over occupied (i, j) of w^((i-1) + 2(j-1)), w the
 * primitive cube root of unity.  Every piece contributes
 * w^((i-1)+2(j-1)) * (1 + w + w^2) = 0, and a full line contributes a
 * geometric sum of cube roots that vanishes exactly when 3 | n, so the value
 * stays 0 along any legal sequence from the empty board when 3 | n.
 */
algebra::EisensteinInt eisenstein_invariant(const Board& board);

/** Invariant after every prefix of the sequence (length+1 values, empty prefix first). */
std::vector<algebra::EisensteinInt> prefix_invariants(int n, const std::vector<Move>& moves);

/**
 * Full certificate for a nonempty-to-empty sequence:
 *
 *  - the move-tally identity P(x,y)(1+x+y) = Q(x)(1+y+..+y^(n-1))
 *                                           + R(y)(1+x+..+x^(n-1)) holds;
 *  - evaluating at non-1 n-th roots of unity kills both right-hand terms, so
 *    a grid point (a1, a2) with P(a1, a2) != 0 forces 1 + a1 + a2 = 0, which
 *    only primitive cube roots satisfy, hence 3 | n.
 *
 * For n = 3 the nonroot evaluation and the sum 1 + a1 + a2 are computed in
 * Z[w] and the zero checks are exact.
 */
struct CertificateReport {
    int n = 0;
    std::size_t sequence_length = 0;
    long placement_count = 0;
    long clear_count = 0;
    bool identity_holds = false;

    // Nonroot data; absent when the sequence is empty (zero polynomial).
    std::optional<algebra::RootOfUnity> nonroot_a1;
    std::optional<algebra::RootOfUnity> nonroot_a2;
    std::complex<double> nonroot_value{0.0, 0.0};
    bool nonroot_exact = false;       // evaluated in Z[w]
    bool corner_sum_zero = false;     // 1 + a1 + a2 == 0
    bool divisibility_certified = false;  // identity + nonroot + corner sum

    bool invariant_zero_every_prefix = false;

    bool has_nonroot() const { return nonroot_a1.has_value(); }
};

/**
 * Replay, tally and certify a sequence that must run from the empty board
 * back to the empty board.  Throws std::invalid_argument when the replay
 * fails or the final board is nonempty.
 */
CertificateReport tally_and_certify(int n, const std::vector<Move>& moves);

}  // namespace olymp::tromino
