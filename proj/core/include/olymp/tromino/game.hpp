#pragma once

#include <olymp/tromino/board.hpp>

#include <cstdint>
#include <vector>

namespace olymp::tromino {

/**
 * Explicit nonempty move sequence that starts and ends on an empty board.
 *
 * Defined for every positive n divisible by 3 and returns exactly
 * 3*(n/3)^2 + n moves; throws std::invalid_argument for other n.  With
 * m = n/3 the schedule has two phases:
 *
 *   1. For each group of three columns, fill the middle column with 2m
 *      staggered pieces and clear it, leaving a fixed residue in the two
 *      outer columns.
 *   2. For each band of rows (3t+1, 3t+2), one piece per group completes
 *      both rows, which are then cleared bottom to top.
 *
 * Rows divisible by 3 only ever hold stones that leave with the phase-1
 * column clears, so the final board is empty.
 */
std::vector<Move> constructive_clear(int n);

enum class SearchStatus {
    kWitnessFound,   // shortest nonempty empty-to-empty sequence found
    kProvenAbsent,   // reachable space exhausted, no such sequence exists
    kInconclusive,   // state budget ran out before either outcome
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::kInconclusive;
    std::vector<Move> witness;       // present iff status == kWitnessFound
    std::uint64_t states_explored = 0;  // distinct nonempty states discovered
};

/**
 * Breadth-first search over all boards reachable from empty for the shortest
 * nonempty move sequence returning to empty.
 *
 * Levels are explored in move order (placements by ascending (i, j), column
 * clears, row clears), so the witness is the lexicographically first one of
 * minimal length and the result is deterministic.  `max_states` bounds the
 * number of distinct states; exceeding it yields kInconclusive, which is
 * reported as such and never conflated with a proof of absence.  Requires
 * 2 <= n and n*n <= 64; `threads` > 1 splits each level across workers
 * without changing the outcome.
 */
SearchOutcome exhaustive_search(int n, std::uint64_t max_states = 10'000'000, int threads = 1);

}  // namespace olymp::tromino
